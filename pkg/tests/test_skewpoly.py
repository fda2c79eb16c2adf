import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spin_nilhecke.skewpoly import (
    DomainError, EvenPolynomial, ScalarDomain, SkewPolynomial, mono_mul, monomials_of_degree,
    parse_polynomial, point_action, polynomial_from_json,
)
from spin_nilhecke.demazure import DivisionNotExact


def word_product(a, b):
    """Oracle: multiply as words of variable indices and bubble-sort with anticommutation."""
    word = [i for i, r in enumerate(a) for _ in range(r)] + [i for i, r in enumerate(b) for _ in range(r)]
    sign = 1
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                sign = -sign
                changed = True
    exp = [0] * len(a)
    for i in word:
        exp[i] += 1
    return sign, tuple(exp)


exponents = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)


def polys(n=3, kind=SkewPolynomial):
    return st.dictionaries(st.lists(st.integers(0, 3), min_size=n, max_size=n).map(tuple),
                           st.integers(-5, 5), max_size=5).map(lambda d: kind(n, d))


@given(exponents, exponents)
def test_merge_sign_matches_word_oracle(a, b):
    assert mono_mul(a, b) == word_product(a, b)


def test_variables_anticommute_and_powers_commute():
    x1, x2, x3 = (SkewPolynomial.variable(3, i) for i in (1, 2, 3))
    assert x2 * x1 == -(x1 * x2)
    assert x3 * x1 * x2 == x1 * x2 * x3
    assert (x1 ** 2) * x2 == x2 * (x1 ** 2)
    assert str(x3 * x2 * x1) == "-x1*x2*x3"


@given(polys(), polys(), polys())
def test_skew_multiplication_is_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(polys(), polys(), polys())
def test_distributive(f, g, h):
    assert f * (g + h) == f * g + f * h


@given(polys(kind=EvenPolynomial), polys(kind=EvenPolynomial))
def test_even_ring_is_commutative(f, g):
    assert f * g == g * f


@given(polys())
def test_text_round_trip(f):
    assert parse_polynomial(str(f), 3) == f


@given(polys())
def test_json_round_trip(f):
    data = json.loads(json.dumps(f.to_json()))
    assert polynomial_from_json(data) == f
    assert all(isinstance(t["coeff"], str) for t in data["terms"])


def test_parse_orders_factors_left_to_right():
    assert parse_polynomial("x2*x1", 2) == parse_polynomial("-x1*x2", 2)
    assert parse_polynomial("x2*x1", 2, kind="even") == parse_polynomial("x1*x2", 2, kind="even")
    assert str(parse_polynomial("3*x1^2*x2 - x3")) == "3*x1^2*x2 - x3"


@pytest.mark.parametrize("text", ["x1^^2", "3*", "*x1", "x1 +", "y1", "x0", "(x1"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_polynomial(text, 3)


def test_output_terms_are_in_descending_lex_order():
    f = parse_polynomial("x3 + x1*x2 + x1^2 + 1", 3)
    assert str(f) == "x1^2 + x1*x2 + x3 + 1"


def test_monomials_of_degree_counts():
    assert len(monomials_of_degree(3, 4)) == 15


def test_scalar_domains():
    assert ScalarDomain.DYADIC.contains(Fraction(3, 8))
    assert not ScalarDomain.DYADIC.contains(Fraction(1, 3))
    assert not ScalarDomain.INTEGER.contains(Fraction(1, 2))
    f = SkewPolynomial(2, {(1, 0): 3})
    assert f.divide_scalar(2, ScalarDomain.DYADIC) == SkewPolynomial(2, {(1, 0): Fraction(3, 2)})
    with pytest.raises(DomainError):
        f.divide_scalar(2, ScalarDomain.INTEGER)
    with pytest.raises(DomainError):
        f.divide_scalar(3 * 5, ScalarDomain.DYADIC)


def test_exact_division():
    f = parse_polynomial("x1^2 - x2^2", 2, kind="even")
    g = parse_polynomial("x1 - x2", 2, kind="even")
    assert f.exact_divide(g) == parse_polynomial("x1 + x2", 2, kind="even")
    with pytest.raises(DivisionNotExact):
        parse_polynomial("x1^2 + x2", 2, kind="even").exact_divide(g)


@pytest.mark.parametrize("wtype,n", [("b", 2), ("b", 3), ("d", 2), ("d", 3)])
@given(data=st.data())
def test_point_action_is_an_involutive_ring_map(wtype, n, data):
    f = data.draw(polys(n))
    g = data.draw(polys(n))
    i = data.draw(st.integers(1, n))
    assert point_action(point_action(f, wtype, i), wtype, i) == f
    assert point_action(f * g, wtype, i) == point_action(f, wtype, i) * point_action(g, wtype, i)


def test_rank_mismatch_is_rejected():
    with pytest.raises(ValueError):
        SkewPolynomial.variable(2, 1) + SkewPolynomial.variable(3, 1)
