import pytest
from hypothesis import given, strategies as st

from spin_nilhecke.demazure import (
    DemazureOperator, apply, apply_operator_word, apply_word, relations, root, verify_relations,
)
from spin_nilhecke.kinds import generator_indices
from spin_nilhecke.skewpoly import EvenPolynomial, SkewPolynomial, parse_polynomial, point_action


def polys(n, kind=SkewPolynomial):
    return st.dictionaries(st.lists(st.integers(0, 4), min_size=n, max_size=n).map(tuple),
                           st.integers(-4, 4), max_size=4).map(lambda d: kind(n, d))


@pytest.mark.parametrize("wtype,n", [("a", 3), ("b", 2), ("b", 3), ("d", 2), ("d", 3)])
@given(data=st.data())
def test_twisted_leibniz_rule(wtype, n, data):
    f, g = data.draw(polys(n)), data.draw(polys(n))
    i = data.draw(st.sampled_from(list(generator_indices(wtype, n))))
    d = DemazureOperator("spin", wtype, i, n)
    assert d(f * g) == d(f) * g + point_action(f, wtype, i) * d(g)


@pytest.mark.parametrize("wtype,n,index,image", [
    ("b", 2, 1, {1: "1", 2: "1"}),
    ("b", 2, 2, {1: "0", 2: "1"}),
    ("d", 2, 2, {1: "1", 2: "-1"}),
    ("b", 1, 1, {1: "1"}),
])
def test_base_values(wtype, n, index, image):
    d = DemazureOperator("spin", wtype, index, n)
    for j, text in image.items():
        assert d(SkewPolynomial.variable(n, j)) == parse_polynomial(text, n)


def test_operators_lower_degree_by_one_in_x():
    d = DemazureOperator("spin", "b", 2, 3)
    f = parse_polynomial("x1^3*x2^2 + x2^5", 3)
    assert d(f).degrees() <= {4}


@pytest.mark.parametrize("wtype,n", [("a", 2), ("a", 3), ("b", 1), ("b", 2), ("b", 3), ("d", 2), ("d", 3)])
def test_spin_relations_hold(wtype, n):
    report = verify_relations("spin", wtype, n, max_degree=6)
    assert report.passed, [r.to_json() for r in report.failures()]


@pytest.mark.parametrize("wtype,n", [("a", 2), ("a", 3), ("b", 2), ("b", 3), ("d", 2), ("d", 3)])
def test_even_relations_hold_with_exact_division(wtype, n):
    report = verify_relations("even", wtype, n, max_degree=6)
    assert report.passed and report.division_failures == 0


def test_relation_families_are_named():
    fams = {r.family for r in relations("spin", "d", 3)}
    assert {"d_nil_square", "d_braid", "d_shift_left"} <= fams


def test_words_apply_rightmost_first():
    f = parse_polynomial("x1^3*x2", 2)
    assert apply_word("spin", "b", (1, 2), f) == apply_word("spin", "b", (1,), apply_word("spin", "b", (2,), f))
    x_then_d = apply_operator_word("spin", "b", (("d", 1), ("x", 1)), SkewPolynomial.one(2))
    assert x_then_d == DemazureOperator("spin", "b", 1, 2)(SkewPolynomial.variable(2, 1))


def test_broken_relation_is_detected():
    """A deliberately wrong relation must fail, so the checker is not vacuous."""
    from spin_nilhecke.demazure import Relation, check_relation

    wrong = Relation("wrong_sign", "d_1 x_1 - x_2 d_1 = 1", (("i", 1),), ((1, (("d", 1), ("x", 1))), (-1, (("x", 2), ("d", 1)))), 1)
    assert not check_relation("spin", "b", 2, wrong, 4).passed


@pytest.mark.parametrize("wtype,n,index,text", [("a", 2, 1, "x1 - x2"), ("b", 2, 2, "2*x2"), ("d", 2, 2, "x1 + x2")])
def test_even_roots(wtype, n, index, text):
    assert root(wtype, n, index) == parse_polynomial(text, n, kind="even")


@given(polys(3, EvenPolynomial))
def test_even_operator_kills_invariants_of_its_reflection(f):
    d = DemazureOperator("even", "b", 3, 3)
    sym = f + point_action(f, "b", 3)
    assert d(sym) == EvenPolynomial.zero(3)
