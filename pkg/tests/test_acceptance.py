"""
Acceptance criteria at full bounds. Each criterion test records one line,
``CRITERION k PASS|FAIL ...``, shown in the pytest terminal summary and
printed when this file is run as a script.

Criteria 3 and 9 contain a literal claim that does not hold; those claims
are strict xfail tests and the criterion line reports FAIL. The remaining
parts of those criteria are checked normally.
"""

from functools import lru_cache

import pytest

from spin_nilhecke.suites import run_suite

SEED = 0

CRITERIA = {
    1: ("relations", "spin B n<=4 and D n<=4 relations on monomials of degree <= 8"),
    2: ("constants", "identity Schubert constant: 1 in type B, 2^(n-1) in type D"),
    3: ("schubert-basis", "type B box basis, type D independence, PBW evaluation rank |d| <= 8"),
    4: ("symmetric", "generator membership, Hilbert series to q^40, shifted identity"),
    5: ("decomposition", "200 random round trips per rank with symmetric coefficients"),
    6: ("matrix", "matrix homomorphism and all constant matrix units"),
    7: ("dyadic", "type D rank 2 units over dyadic rationals; rank 3 probe"),
    8: ("graded-ranks", "nilCoxeter and nilHecke graded ranks to truncation 20"),
    9: ("center", "center characterization for B and D at rank 2, degree cap 8"),
    10: ("even", "even relations, invariant rings, even matrix units, kernel correspondence"),
}

# checks whose outcome is reported without deciding the criterion
PROBES = ("dyadic-probe-",)


@lru_cache(maxsize=None)
def checks(k: int):
    return tuple(run_suite(CRITERIA[k][0], "full", SEED))


def line(k: int) -> str:
    results = [c for c in checks(k) if not c.name.startswith(PROBES)]
    failed = [c.name for c in results if not c.passed]
    status = "FAIL" if failed else "PASS"
    text = f"CRITERION {k:>2} {status}  {CRITERIA[k][1]} ({len(results) - len(failed)}/{len(results)} checks)"
    if failed:
        text += "  failed: " + ", ".join(failed)
    probes = [c for c in checks(k) if c.name.startswith(PROBES)]
    for p in probes:
        text += f"  [{p.name}: {p.details.get('solved')}/{p.details.get('total')} solved]"
    return text


def _record(k, log):
    log[k] = line(k)
    print(log[k])


def _named(k, prefix):
    return [c for c in checks(k) if c.name.startswith(prefix)]


def _assert_all(results):
    bad = [(c.name, c.witness) for c in results if not c.passed]
    assert results and not bad, bad


@pytest.mark.parametrize("k", [1, 2, 4, 5, 6, 8, 10])
def test_criterion(k, acceptance_log):
    _record(k, acceptance_log)
    _assert_all(list(checks(k)))


def test_criterion_3_supported_parts(acceptance_log):
    _record(3, acceptance_log)
    _assert_all(_named(3, "box-quotient-") + _named(3, "independence-") + _named(3, "pbw-rank-"))


@pytest.mark.xfail(strict=True, reason="type B Schubert polynomials are not contained in the box span for n >= 2")
def test_criterion_3_literal_box_basis():
    _assert_all(_named(3, "box-containment-"))


def test_criterion_7(acceptance_log):
    _record(7, acceptance_log)
    _assert_all(_named(7, "dyadic-units-"))
    assert _named(7, "dyadic-probe-d3")  # reported, outcome not asserted


def test_criterion_9_supported_parts(acceptance_log):
    _record(9, acceptance_log)
    _assert_all(_named(9, "center-commute-") + _named(9, "center-commutant-b") + _named(9, "center-own-lambda-"))


@pytest.mark.xfail(strict=True, reason="the type D commutant is the type D symmetric ring, larger than the squares")
def test_criterion_9_literal_type_d():
    _assert_all(_named(9, "center-commutant-d"))


if __name__ == "__main__":
    for k in CRITERIA:
        print(line(k))
