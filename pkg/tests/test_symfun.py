import pytest
from hypothesis import given, strategies as st

from spin_nilhecke.skewpoly import EvenPolynomial, SkewPolynomial, parse_polynomial
from spin_nilhecke.symfun import (
    LambdaElement, NotExpressible, elementary, expand, express_in_elementary, generator_degrees, generators,
    hilbert_series, in_lambda, invariant_ring_check, kernel_correspondence_check, kk_identity_check,
    lambda_closed_form, lambda_degree_count,
)

SPIN = [("b", 1), ("b", 2), ("b", 3), ("b", 4), ("d", 2), ("d", 3), ("d", 4)]


@pytest.mark.parametrize("wtype,n", SPIN)
def test_generators_are_symmetric(wtype, n):
    for k in range(1, n + 1):
        assert elementary("spin", wtype, n, k).certificate.member


def test_generator_shapes():
    assert [str(g) for g in generators("spin", "d", 2)] == ["x1^2 + x2^2", "x1*x2"]
    assert generator_degrees("spin", "d", 3)[-1] == (6, 1)


def test_non_member_has_witness():
    m = in_lambda("spin", "b", 2, parse_polynomial("x1^2", 2))
    assert not m and any(not p.is_zero() for p in m.certificate.values())
    assert not in_lambda("spin", "b", 2, parse_polynomial("x1*x2", 2))
    assert in_lambda("spin", "d", 2, parse_polynomial("x1*x2", 2))


def test_spin_type_a_is_rejected():
    with pytest.raises(ValueError):
        generators("spin", "a", 3)


@pytest.mark.parametrize("wtype,n", [("b", 2), ("b", 3), ("d", 2), ("d", 3)])
@given(data=st.data())
def test_express_round_trip(wtype, n, data):
    expr = data.draw(st.dictionaries(st.lists(st.integers(0, 2), min_size=n, max_size=n).map(tuple),
                                     st.integers(-3, 3).filter(bool), max_size=3))
    f = expand(expr, "spin", wtype, n)
    assert in_lambda("spin", wtype, n, f)
    back = express_in_elementary(f, "spin", wtype, n)
    assert expand(back, "spin", wtype, n) == f
    assert back == {a: c for a, c in expr.items() if c}


@pytest.mark.parametrize("variant,wtype,n", [("even", "a", 3), ("even", "b", 2), ("even", "d", 3)])
def test_express_even(variant, wtype, n):
    expr = {tuple(range(n)): 2, (1,) + (0,) * (n - 1): -1}
    f = expand(expr, variant, wtype, n)
    assert express_in_elementary(f, variant, wtype, n) == expr


def test_not_expressible():
    with pytest.raises(NotExpressible):
        express_in_elementary(parse_polynomial("x1^2", 2), "spin", "b", 2)


def test_lambda_element_validates():
    with pytest.raises(ValueError):
        LambdaElement.from_polynomial("spin", "b", 2, parse_polynomial("x1", 2))
    e = LambdaElement.from_polynomial("spin", "b", 2, parse_polynomial("x1^2 + x2^2", 2), express=True)
    assert e.expression == {(1, 0): 1} and e.expand() == e.polynomial


@pytest.mark.parametrize("wtype,n", SPIN)
def test_hilbert_series_matches_closed_form(wtype, n):
    assert hilbert_series("spin", wtype, n, 40).specialize().agrees_with(lambda_closed_form("spin", wtype, n, 40))


@pytest.mark.parametrize("wtype,n", [("b", 2), ("d", 3)])
def test_degree_count_matches_series(wtype, n):
    h = hilbert_series("spin", wtype, n, 24).specialize()
    for d in range(0, 25, 2):
        assert lambda_degree_count("spin", wtype, n, d) == h.coefficient(d)[0]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_shifted_identity(n):
    results = kk_identity_check(n)
    assert [r.k for r in results] == list(range(n + 1))
    assert all(r.passed for r in results)


def test_shifted_identity_needs_two_variables():
    with pytest.raises(ValueError):
        kk_identity_check(1)


@pytest.mark.parametrize("wtype,n", [("a", 2), ("a", 3), ("b", 2), ("d", 3)])
def test_even_invariant_ring(wtype, n):
    assert all(r.passed for r in invariant_ring_check(wtype, n, 5))


@pytest.mark.parametrize("n", [2, 3])
def test_kernel_correspondence(n):
    assert all(r.passed for r in kernel_correspondence_check(n, 6))
