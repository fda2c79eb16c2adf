"""
Command-line front end: ``spin-nh <subcommand> ...``.

Every subcommand prints either text or a JSON report (``--json``). Exit status
is 0 when every gating check passes, 1 when one fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .kinds import Variant, WeylType, as_type, as_variant, check_rank
from .nilhecke import (
    PBWResidualError, closed_form_rank, graded_rank, parse_expression, pbw_decompose, to_matrix,
)
from .schubert import kappa, schubert, schubert_family
from .skewpoly import DomainError, ScalarDomain, parse_polynomial
from .suites import PROFILES, CheckResult, center_checks, relation_checks, run_suite, suite_names, unit_check
from .symfun import NotExpressible, express_in_elementary, hilbert_series, in_lambda, lambda_closed_form
from .weyl import format_word, length, parse_element, reduced_word

SCHEMA = 1


class UsageError(ValueError):
    pass


def _checks_report(command: str, args, checks: list[CheckResult], result=None) -> tuple[dict, int]:
    gating_failed = [c for c in checks if c.gating and not c.passed]
    report = {
        "schema": SCHEMA,
        "command": command,
        "config": {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "json", "format")},
        "checks": [c.to_json() for c in checks],
        "passed": not gating_failed,
    }
    if result is not None:
        report["result"] = result
    return report, (1 if gating_failed else 0)


def _print_checks(checks: list[CheckResult]) -> None:
    for c in checks:
        status = "PASS" if c.passed else ("FAIL" if c.gating else "FAIL (non-gating)")
        print(f"{status:<18} {c.name:<28} {c.anchor}")
        if not c.passed and c.witness is not None:
            print(f"{'':<18} witness: {c.witness}")
    failed = sum(1 for c in checks if not c.passed)
    gating = sum(1 for c in checks if c.gating and not c.passed)
    print(f"{len(checks)} checks, {failed} failed ({gating} gating)")


def _ambient(args) -> tuple[Variant, WeylType, int]:
    try:
        variant, wtype = as_variant(args.variant), as_type(args.type)
        check_rank(wtype, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return variant, wtype, args.rank


def _want_json(args) -> bool:
    return bool(getattr(args, "json", False)) or getattr(args, "format", "text") == "json"


# ---------------------------------------------------------------------------
# subcommands; each returns (checks, result payload, text lines)

def cmd_verify(args):
    variant, wtype, n = _ambient(args)
    if variant is Variant.SPIN and wtype is WeylType.A and n < 2:
        raise UsageError("spin type A needs rank >= 2")
    checks = relation_checks(variant, wtype, n, args.max_degree)
    return checks, None, None


def cmd_schubert(args):
    variant, wtype, n = _ambient(args)
    if wtype is WeylType.A and variant is Variant.SPIN:
        raise UsageError("spin Schubert polynomials are available for types b and d")
    if args.all == bool(args.element):
        raise UsageError("give exactly one of --element or --all")
    if args.all:
        family = schubert_family(variant, wtype, n)
    else:
        w = parse_element(args.element, wtype, n)
        family = {w: schubert(variant, wtype, n, w)}
    items, lines = [], []
    for w, s in family.items():
        word = reduced_word(w)
        items.append({"window": list(w.window), "word": list(word), "length": length(w),
                      "polynomial": s.to_json(), "text": str(s), "kappa": str(kappa(variant, wtype, n, w))})
        lines.append(f"{format_word(word):<24} {list(w.window)!s:<16} {s}")
    return [], {"schubert": items}, lines


def cmd_lambda(args):
    variant, wtype, n = _ambient(args)
    if variant is Variant.SPIN and wtype is WeylType.A:
        raise UsageError("spin type A has no symmetric ring here; use b or d")
    kind = "skew" if variant is Variant.SPIN else "even"
    if args.op == "series":
        h = hilbert_series(variant, wtype, n, args.truncate)
        c = lambda_closed_form(variant, wtype, n, args.truncate)
        ok = h.specialize().agrees_with(c)
        check = CheckResult("hilbert-series", "generator enumeration equals the closed graded rank",
                            {"variant": variant.value, "type": wtype.value, "rank": n, "truncation": args.truncate},
                            ok, None if ok else str(h.specialize()))
        return [check], {"enumeration": h.to_json(), "closed_form": c.to_json()}, [f"enumeration: {h}", f"closed form: {c}"]
    if not args.poly:
        raise UsageError("--poly is required for member and express")
    f = parse_polynomial(args.poly, n, kind)
    params = {"variant": variant.value, "type": wtype.value, "rank": n, "poly": args.poly}
    if args.op == "member":
        m = in_lambda(variant, wtype, n, f)
        check = CheckResult("membership", "polynomial lies in the common kernel of the Demazure operators",
                            params, m.member, None if m.member else m.to_json())
        return [check], {"member": m.member, "images": m.to_json()}, [f"member: {m.member}"]
    try:
        expr = express_in_elementary(f, variant, wtype, n)
    except NotExpressible as exc:
        check = CheckResult("express", "polynomial is a polynomial in the symmetric generators", params, False, str(exc))
        return [check], None, []
    terms = [{"exp": list(a), "coeff": str(c)} for a, c in sorted(expr.items())]
    return [CheckResult("express", "polynomial is a polynomial in the symmetric generators", params, True)], \
        {"generators": terms}, [format_expression(expr)]


def format_expression(expr: dict) -> str:
    """``{(1, 0): 3, (0, 2): -1}`` as ``3*e1 - e2^2``."""
    parts = []
    for a, c in sorted(expr.items(), reverse=True):
        body = "*".join(f"e{k + 1}" + (f"^{m}" if m > 1 else "") for k, m in enumerate(a) if m)
        mag = abs(c)
        text = body if body and mag == 1 else (f"{mag}*{body}" if body else str(mag))
        parts.append((" - " if c < 0 else " + ") + text if parts else ("-" if c < 0 else "") + text)
    return "".join(parts) or "0"


def cmd_pbw(args):
    variant, wtype, n = _ambient(args)
    a = parse_expression(args.expr, variant, wtype, n)
    try:
        b = pbw_decompose(a, variant, wtype, n, args.domain)
    except PBWResidualError as exc:
        return [CheckResult("pbw", "operator has a PBW normal form", {"expr": args.expr}, False, str(exc))], None, []
    return [], {"element": b.to_json(), "text": str(b)}, [str(b)]


def cmd_matrix(args):
    variant, wtype, n = _ambient(args)
    a = parse_expression(args.expr, variant, wtype, n)
    m = to_matrix(a, args.domain)
    return [], {"matrix": m.to_json()}, [str(m)]


def cmd_matrix_units(args):
    variant, wtype, n = _ambient(args)
    check = unit_check(variant, wtype, n, args.domain)
    return [check], None, [f"solved {check.details['solved']} of {check.details['total']}"]


def cmd_center(args):
    variant, wtype, n = _ambient(args)
    if variant is not Variant.SPIN or wtype is WeylType.A:
        raise UsageError("center is checked for spin types b and d")
    return center_checks(wtype, n, args.max_degree), None, None


def cmd_rank_series(args):
    variant, wtype, n = _ambient(args)
    if args.what == "lambda" and variant is Variant.SPIN and wtype is WeylType.A:
        raise UsageError("spin type A has no symmetric ring here; use b or d")
    enum = graded_rank(args.what, variant, wtype, n, args.truncate)
    closed = closed_form_rank(args.what, variant, wtype, n, args.truncate)
    lhs = enum.specialize() if args.what == "lambda" else enum
    ok = lhs.agrees_with(closed)
    check = CheckResult(f"graded-rank-{args.what}", "basis enumeration equals the product formula",
                        {"variant": variant.value, "type": wtype.value, "rank": n, "truncation": args.truncate,
                         "what": args.what}, ok, None if ok else str(enum))
    return [check], {"enumeration": enum.to_json(), "closed_form": closed.to_json()}, \
        [f"enumeration: {enum}", f"closed form: {closed}"]


def _run_named_suite(job):
    name, profile, seed = job
    return run_suite(name, profile, seed)


def thread_cap() -> int:
    """Worker count: ``SPIN_NH_THREADS`` if set, otherwise the CPU count."""
    raw = os.environ.get("SPIN_NH_THREADS")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"SPIN_NH_THREADS must be an integer, got {raw!r}") from None
        if value < 1:
            raise UsageError("SPIN_NH_THREADS must be positive")
        return value
    return os.cpu_count() or 1


def cmd_check_all(args):
    names = args.only or suite_names()
    unknown = [s for s in names if s not in suite_names()]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(suite_names())}")
    jobs = [(s, args.profile, args.seed) for s in names]
    workers = min(thread_cap(), len(jobs))
    if workers <= 1:
        results = [_run_named_suite(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_named_suite, jobs))  # map keeps submission order
    checks = [c for group in results for c in group]
    return checks, None, None


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variant", choices=["spin", "even"], default="spin")
    common.add_argument("--type", choices=["a", "b", "d"], default="b")
    common.add_argument("--rank", type=int, default=2)
    common.add_argument("--json", action="store_true", help="print a JSON report")

    domains = [d.value for d in ScalarDomain]
    parser = argparse.ArgumentParser(prog="spin-nh", description="Spin and even nilHecke algebras of types A, B, D.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the defining relations on monomials")
    p.add_argument("--max-degree", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schubert", parents=[common], help="Schubert polynomials")
    p.add_argument("--element", help='window "[2,-1]" or word "s1 s2"')
    p.add_argument("--all", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("lambda", parents=[common], help="symmetric polynomials")
    p.add_argument("--op", choices=["member", "express", "series"], required=True)
    p.add_argument("--poly", help='polynomial text such as "x1^2 + x2^2"')
    p.add_argument("--truncate", type=int, default=20)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("pbw", parents=[common], help="PBW normal form of an operator expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--domain", choices=domains, default="rational")
    p.set_defaults(func=cmd_pbw)

    p = sub.add_parser("matrix", parents=[common], help="matrix over the symmetric ring of an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--domain", choices=domains, default=None)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("matrix-units", parents=[common], help="solve every constant matrix unit")
    p.add_argument("--domain", choices=domains, default="rational")
    p.set_defaults(func=cmd_matrix_units)

    p = sub.add_parser("center", parents=[common], help="center characterization")
    p.add_argument("--max-degree", type=int, default=8, help="q-degree cap")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("rank-series", parents=[common], help="graded ranks against product formulas")
    p.add_argument("--what", choices=["nc", "nh", "pol", "lambda"], default="nh")
    p.add_argument("--truncate", type=int, default=20)
    p.set_defaults(func=cmd_rank_series)

    p = sub.add_parser("check-all", help="run the verification suites")
    p.add_argument("--profile", choices=sorted(PROFILES), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--only", action="append", metavar="SUITE", help="run only this suite (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_all)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad flags
    try:
        checks, result, lines = args.func(args)
    except (UsageError, ValueError, DomainError) as exc:
        # parse errors in polynomials, elements and expressions are usage errors
        print(f"spin-nh {args.command}: error: {exc}", file=sys.stderr)
        return 2
    report, status = _checks_report(args.command, args, checks, result)
    if _want_json(args):
        print(json.dumps(report, sort_keys=True, indent=2, default=str))
    else:
        if lines:
            print("\n".join(lines))
        if checks:
            _print_checks(checks)
    return status


def main() -> None:
    sys.exit(run())
