"""
Named verification suites shared by the command line and the acceptance
tests. Every suite returns ``CheckResult`` records; a record with
``gating=False`` is reported but does not decide the exit status.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .demazure import verify_relations
from .kinds import as_type, as_variant
from .nilhecke import (
    center_check, closed_form_rank, graded_rank, matrix_unit, multiply,
    pbw_rank_check, random_element, solve_preimage, to_matrix, _generators,
)
from .schubert import (
    basis_check, box_quotient_determinant, constant_check, recompose, schubert_decompose,
)
from .skewpoly import ScalarDomain, SkewPolynomial, monomials_up_to
from .symfun import (
    elementary, generators, hilbert_series, in_lambda, invariant_ring_check,
    kernel_correspondence_check, kk_identity_check, lambda_closed_form,
)
from .weyl import enumerate_group

__all__ = [
    "CheckResult", "PROFILES", "suite_names", "run_suite", "random_polynomial",
    "relation_checks", "unit_check", "center_checks",
]


@dataclass
class CheckResult:
    name: str
    anchor: str
    params: dict
    passed: bool
    witness: object = None
    gating: bool = True
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name, "anchor": self.anchor, "params": self.params,
            "passed": self.passed, "gating": self.gating, "witness": self.witness,
            "details": self.details,
        }


PROFILES = {
    "quick": {
        "relations_b": [1, 2], "relations_d": [2], "relations_degree": 6,
        "constants_b": [1, 2], "constants_d": [2],
        "basis_b": [1, 2], "basis_d": [2], "pbw_ranks": [2], "pbw_degree": 4,
        "lambda_b": [1, 2], "lambda_d": [2], "series_degree": 20, "kk": [2],
        "decompose": [("b", 1), ("b", 2), ("d", 2)], "decompose_count": 20, "decompose_degree": 6,
        "hom_b": [1, 2], "hom_d": [2], "hom_random": 10, "units_b": [1, 2], "units_d": [2],
        "dyadic_probe": [], "ranks": [1, 2], "rank_truncation": 20,
        "center": [("b", 2)], "center_degree": 4,
        "even_relations": [("a", 2), ("b", 2), ("d", 2)], "even_degree": 6,
        "invariants": [("a", 2), ("b", 2), ("d", 2)], "invariant_degree": 4,
        "even_units": [("a", 2), ("b", 2), ("d", 2)], "correspondence": [2], "correspondence_degree": 4,
    },
    "full": {
        "relations_b": [1, 2, 3, 4], "relations_d": [2, 3, 4], "relations_degree": 8,
        "constants_b": [1, 2, 3, 4], "constants_d": [2, 3, 4],
        "basis_b": [1, 2, 3], "basis_d": [2, 3], "pbw_ranks": [1, 2, 3], "pbw_degree": 8,
        "lambda_b": [1, 2, 3, 4], "lambda_d": [2, 3, 4], "series_degree": 40, "kk": [2, 3, 4],
        "decompose": [("b", 1), ("b", 2), ("b", 3), ("d", 2), ("d", 3)], "decompose_count": 200,
        "decompose_degree": 8,
        "hom_b": [1, 2], "hom_d": [2, 3], "hom_random": 50, "units_b": [1, 2], "units_d": [2, 3],
        "dyadic_probe": [3], "ranks": [1, 2, 3, 4], "rank_truncation": 20,
        "center": [("b", 2), ("d", 2)], "center_degree": 8,
        "even_relations": [("a", 1), ("a", 2), ("a", 3), ("b", 1), ("b", 2), ("b", 3), ("d", 2), ("d", 3)],
        "even_degree": 8,
        "invariants": [("a", 1), ("a", 2), ("a", 3), ("b", 1), ("b", 2), ("b", 3), ("d", 2), ("d", 3)],
        "invariant_degree": 6,
        "even_units": [("a", 2), ("a", 3), ("b", 2), ("d", 2)], "correspondence": [1, 2, 3],
        "correspondence_degree": 8,
    },
}


def random_polynomial(rng: random.Random, n: int, max_degree: int, terms: int = 6, coeff_range: int = 9):
    monos = monomials_up_to(n, max_degree)
    out = {}
    for _ in range(rng.randint(1, terms)):
        e = rng.choice(monos)
        out[e] = out.get(e, 0) + rng.randint(-coeff_range, coeff_range)
    return SkewPolynomial(n, out)


# ---------------------------------------------------------------------------

def relation_checks(variant, wtype, n: int, max_degree: int) -> list[CheckResult]:
    """One record per defining relation instance."""
    rep = verify_relations(variant, wtype, n, max_degree)
    out = []
    for r in rep.results:
        params = {"variant": rep.variant.value, "type": rep.wtype.value, "rank": n,
                  "max_degree": max_degree, **r.params}
        tag = ",".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        out.append(CheckResult(
            f"relation-{r.family}" + (f"[{tag}]" if tag else ""), r.formula, params, r.passed and r.division_failures == 0,
            None if r.passed and not r.division_failures else {"monomial": r.counterexample,
                                                               "division_failures": r.division_failures},
            details={"monomials_checked": r.checked}))
    return out


def suite_relations(p, rng):
    out = []
    for wtype, ranks in (("b", p["relations_b"]), ("d", p["relations_d"])):
        for n in ranks:
            rep = verify_relations("spin", wtype, n, p["relations_degree"])
            bad = [f"{r.family} {r.params} at x^{r.counterexample}" for r in rep.failures()]
            out.append(CheckResult(
                f"relations-spin-{wtype}{n}",
                f"spin type {wtype.upper()} nilHecke relations act on the skew-polynomial ring",
                {"type": wtype, "rank": n, "max_degree": p["relations_degree"]},
                rep.passed, bad[:3] or None,
                details={"relations": len(rep.results), "families": len(rep.families())}))
    return out


def suite_constants(p, rng):
    out = []
    for wtype, ranks in (("b", p["constants_b"]), ("d", p["constants_d"])):
        for n in ranks:
            target = 1 if wtype == "b" else 2 ** (n - 1)
            c = constant_check(wtype, n)
            out.append(CheckResult(
                f"constant-{wtype}{n}", f"Schubert polynomial of the identity is +-{target}",
                {"type": wtype, "rank": n}, abs(c) == target, str(c)))
    return out


def suite_basis(p, rng):
    out = []
    for n in p["basis_b"]:
        rep = basis_check("b", n)
        out.append(CheckResult(
            f"box-containment-b{n}",
            "type B Schubert polynomials lie in the box span r_i <= 2n-2i+1 and form a Z-basis of it",
            {"type": "b", "rank": n}, rep.passed,
            None if rep.passed else "Schubert polynomials have monomials outside the box",
            gating=False, details=rep.to_json()))
        out.append(_quotient_check(n))
    for n in p["basis_d"]:
        rep = basis_check("d", n)
        out.append(CheckResult(f"independence-d{n}", "type D Schubert polynomials are linearly independent over Q",
                               {"type": "d", "rank": n}, rep.passed, details=rep.to_json()))
    for wtype in ("b", "d"):
        for n in p["pbw_ranks"]:
            if wtype == "d" and n < 2:
                continue
            bad = []
            for d in range(-p["pbw_degree"], p["pbw_degree"] + 1, 2):
                r, size = pbw_rank_check("spin", wtype, n, d)
                if r != size:
                    bad.append({"q_degree": d, "rank": r, "size": size})
            out.append(CheckResult(
                f"pbw-rank-{wtype}{n}", "PBW elements of each degree act linearly independently",
                {"type": wtype, "rank": n, "max_abs_degree": p["pbw_degree"]}, not bad, bad or None))
    return out


def _quotient_check(n: int) -> CheckResult:
    det = box_quotient_determinant(n)
    return CheckResult(
        f"box-quotient-b{n}",
        "box monomials and type B Schubert polynomials are unimodularly related modulo positive-degree symmetric polynomials",
        {"type": "b", "rank": n}, abs(det) == 1, None if abs(det) == 1 else det, details={"determinant": det})


def suite_lambda(p, rng):
    out = []
    for wtype, ranks in (("b", p["lambda_b"]), ("d", p["lambda_d"])):
        for n in ranks:
            failed = []
            for k in range(1, n + 1):
                try:
                    elementary("spin", wtype, n, k)
                except AssertionError:
                    failed.append(k)
            # generators of type B are also symmetric for type D
            if wtype == "d":
                failed += [f"b{k}" for k, g in enumerate(generators("spin", "b", n), 1) if not in_lambda("spin", "d", n, g)]
            out.append(CheckResult(f"membership-{wtype}{n}", "elementary generators lie in the common kernel",
                                   {"type": wtype, "rank": n}, not failed, failed or None))
            h = hilbert_series("spin", wtype, n, p["series_degree"]).specialize()
            c = lambda_closed_form("spin", wtype, n, p["series_degree"])
            out.append(CheckResult(f"hilbert-{wtype}{n}", "generator enumeration equals the closed graded rank",
                                   {"type": wtype, "rank": n, "truncation": p["series_degree"]},
                                   h.agrees_with(c), None if h.agrees_with(c) else str(h)))
    for n in p["kk"]:
        res = kk_identity_check(n)
        bad = [r.k for r in res if not r.passed]
        out.append(CheckResult(f"shifted-identity-{n}", "shifted generators equal the alternating x_1^2 expansion",
                               {"rank": n}, not bad, bad or None))
    return out


def suite_decompose(p, rng):
    out = []
    for wtype, n in p["decompose"]:
        domain = ScalarDomain.INTEGER if wtype == "b" else ScalarDomain.RATIONAL
        bad = None
        for _ in range(p["decompose_count"]):
            f = random_polynomial(rng, n, p["decompose_degree"])
            dec = schubert_decompose("spin", wtype, n, f, domain, certify=True)
            if recompose("spin", wtype, n, dec) != f or not all(c.certificate for c in dec.values()):
                bad = str(f)
                break
        out.append(CheckResult(f"decompose-{wtype}{n}", "Schubert decomposition over the symmetric ring round-trips",
                               {"type": wtype, "rank": n, "domain": domain.value, "samples": p["decompose_count"],
                                "max_degree": p["decompose_degree"]}, bad is None, bad))
    return out


def _hom_check(wtype, n, count, rng, domain):
    gens = [g for _, g in _generators("spin", wtype, n)]
    pairs = [(a, b) for a in gens for b in gens]
    for _ in range(count):
        pairs.append((random_element("spin", wtype, n, rng.choice(range(-4, 5, 2)), rng),
                      random_element("spin", wtype, n, rng.choice(range(-4, 5, 2)), rng)))
    for a, b in pairs:
        if to_matrix(multiply(a, b), domain) != to_matrix(a, domain) @ to_matrix(b, domain):
            return f"{a} ; {b}"
    return None


def unit_check(variant, wtype, n: int, domain, gating: bool = True, name: str | None = None) -> CheckResult:
    """Solve every constant matrix unit ``E_{v,w}`` over `domain`."""
    domain = ScalarDomain.parse(domain).value
    group = enumerate_group(wtype, n)
    solved, failures = 0, []
    for v in group:
        for w in group:
            res = solve_preimage(matrix_unit(variant, wtype, n, v, w), domain)
            if res:
                solved += 1
            elif len(failures) < 3:
                failures.append({"row": list(v.window), "col": list(w.window), "reason": res.reason})
    total = len(group) ** 2
    return CheckResult(
        name or f"matrix-units-{variant}-{wtype}{n}-{domain}",
        "every constant matrix unit has a preimage in the nilHecke algebra",
        {"variant": as_variant(variant).value, "type": as_type(wtype).value, "rank": n, "domain": domain},
        solved == total, failures or None, gating=gating, details={"solved": solved, "total": total})


def suite_matrix(p, rng):
    out = []
    for wtype, ranks, domain in (("b", p["hom_b"], "int"), ("d", p["hom_d"], "rational")):
        for n in ranks:
            bad = _hom_check(wtype, n, p["hom_random"], rng, domain)
            out.append(CheckResult(f"homomorphism-{wtype}{n}", "matrix representation is multiplicative",
                                   {"type": wtype, "rank": n, "random_pairs": p["hom_random"]}, bad is None, bad))
    for wtype, ranks, domain in (("b", p["units_b"], "int"), ("d", p["units_d"], "rational")):
        for n in ranks:
            out.append(unit_check("spin", wtype, n, domain, name=f"matrix-units-{wtype}{n}"))
    return out


def suite_dyadic(p, rng):
    out = [unit_check("spin", "d", 2, "dyadic", name="dyadic-units-d2")]
    for n in p["dyadic_probe"]:
        out.append(unit_check("spin", "d", n, "dyadic", gating=False, name=f"dyadic-probe-d{n}"))
    return out


def suite_ranks(p, rng):
    out = []
    t = p["rank_truncation"]
    for wtype in ("b", "d"):
        for n in p["ranks"]:
            if wtype == "d" and n < 2:
                continue
            bad = [what for what in ("nc", "nh")
                   if not graded_rank(what, "spin", wtype, n, t).agrees_with(closed_form_rank(what, "spin", wtype, n, t))]
            out.append(CheckResult(f"graded-rank-{wtype}{n}", "nilCoxeter and nilHecke graded ranks match product formulas",
                                   {"type": wtype, "rank": n, "truncation": t}, not bad, bad or None))
    return out


def center_checks(wtype, n: int, degree_cap: int) -> list[CheckResult]:
    """
    Commutation of the symmetric polynomials in the squares, and the commutant
    comparison. In type D the commutant is the larger symmetric ring of the
    algebra's own type, so the squares comparison is reported without gating.
    """
    rep = center_check(wtype, n, degree_cap)
    params = {"type": rep.wtype.value, "rank": n, "degree_cap": degree_cap}
    bad = [s for s in rep.slices if not s["passed"]]
    own_bad = [s for s in rep.slices if s["commutant_dim"] != s["own_lambda_dim"]]
    return [
        CheckResult(f"center-commute-{rep.wtype.value}{n}", "symmetric polynomials in the squares are central",
                    params, rep.direction_i, [k for k, v in rep.commuting.items() if not v] or None),
        CheckResult(f"center-commutant-{rep.wtype.value}{n}",
                    "the commutant of the generators is the symmetric polynomials in the squares",
                    params, rep.direction_ii, bad or None, gating=rep.wtype.value == "b",
                    details={"slices": rep.slices}),
        CheckResult(f"center-own-lambda-{rep.wtype.value}{n}",
                    "commutant dimensions equal those of the symmetric ring of the same type",
                    params, rep.matches_own_lambda, own_bad or None),
    ]


def suite_center(p, rng):
    out = []
    for wtype, n in p["center"]:
        out += center_checks(wtype, n, p["center_degree"])
    return out


def suite_even(p, rng):
    out = []
    for wtype, n in p["even_relations"]:
        rep = verify_relations("even", wtype, n, p["even_degree"])
        out.append(CheckResult(f"even-relations-{wtype}{n}", "even nilHecke relations with exact divided differences",
                               {"type": wtype, "rank": n, "max_degree": p["even_degree"]},
                               rep.passed and rep.division_failures == 0,
                               [f"{r.family} {r.params}" for r in rep.failures()][:3] or None,
                               details={"division_failures": rep.division_failures}))
    for wtype, n in p["invariants"]:
        res = invariant_ring_check(wtype, n, p["invariant_degree"])
        bad = [r.degree for r in res if not r.passed]
        out.append(CheckResult(f"invariants-{wtype}{n}", "common kernel equals the invariant ring and the generator span",
                               {"type": wtype, "rank": n, "max_degree": p["invariant_degree"]}, not bad, bad or None))
    for wtype, n in p["even_units"]:
        out.append(unit_check("even", wtype, n, "rational", name=f"even-matrix-units-{wtype}{n}"))
    for n in p["correspondence"]:
        res = kernel_correspondence_check(n, p["correspondence_degree"])
        bad = [r.degree for r in res if not r.passed]
        out.append(CheckResult(f"kernel-correspondence-{n}", "spin and even kernels agree on squared variables",
                               {"rank": n, "max_degree": p["correspondence_degree"]}, not bad, bad or None))
    return out


SUITES = {
    "relations": suite_relations,
    "constants": suite_constants,
    "schubert-basis": suite_basis,
    "symmetric": suite_lambda,
    "decomposition": suite_decompose,
    "matrix": suite_matrix,
    "dyadic": suite_dyadic,
    "graded-ranks": suite_ranks,
    "center": suite_center,
    "even": suite_even,
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, profile: str = "full", seed: int = 0) -> list[CheckResult]:
    """Run one suite; the RNG is seeded from (seed, suite name) for reproducibility."""
    rng = random.Random(f"{seed}:{name}")
    return SUITES[name](PROFILES[profile], rng)

