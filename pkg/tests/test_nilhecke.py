import random

import pytest
from hypothesis import given, settings, strategies as st

from spin_nilhecke.nilhecke import (
    PBWResidualError, apply_element, center_check, closed_form_rank, element_from_word, generator_element,
    graded_rank, matrix_unit, multiply, parse_expression, pbw_decompose, pbw_rank_check, random_element,
    solve_preimage, solve_preimage_dense, to_matrix, unit_element,
)
from spin_nilhecke.skewpoly import SkewPolynomial, monomials_up_to, parse_polynomial
from spin_nilhecke.weyl import enumerate_group, length, longest_element, longest_word


def gen(wtype, n, kind, i, variant="spin"):
    return generator_element(variant, wtype, n, kind, i)


def test_defining_relations_as_elements():
    d1, d2 = gen("b", 2, "d", 1), gen("b", 2, "d", 2)
    x1, x2 = gen("b", 2, "x", 1), gen("b", 2, "x", 2)
    zero = unit_element("spin", "b", 2).scale(0)
    assert multiply(d1, d1) == zero and multiply(d2, d2) == zero
    assert str(multiply(d1, x1) + multiply(x2, d1)) == "1"
    assert multiply(x1, x2) + multiply(x2, x1) == zero


def test_products_match_operator_composition():
    rng = random.Random(5)
    monos = [SkewPolynomial.monomial(3, e) for e in monomials_up_to(3, 5)]
    for _ in range(10):
        a = random_element("spin", "d", 3, rng.choice([-2, 0, 2]), rng)
        b = random_element("spin", "d", 3, rng.choice([-2, 0, 2]), rng)
        ab = multiply(a, b)
        assert all(apply_element(ab, f) == apply_element(a, apply_element(b, f)) for f in monos)


@pytest.mark.parametrize("wtype,n", [("b", 2), ("d", 3)])
@settings(max_examples=15)
@given(seed=st.integers(0, 10 ** 6))
def test_multiplication_is_associative(wtype, n, seed):
    rng = random.Random(seed)
    a, b, c = (random_element("spin", wtype, n, rng.choice([-2, 0, 2, 4]), rng) for _ in range(3))
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_longest_word_gives_top_operator():
    e = element_from_word("spin", "b", 2, longest_word("b", 2))
    assert list(e.coefficients()) == [longest_element("b", 2)]
    assert element_from_word("spin", "b", 2, (1, 1)).is_zero()


def test_pbw_of_composite_operator():
    a = parse_expression("d2 x1 d1", "spin", "b", 2)
    b = pbw_decompose(a, "spin", "b", 2)
    assert b == a


def test_operator_outside_algebra_is_rejected():
    def constant_term(f):
        return SkewPolynomial.constant(f.rank, f.constant_term())

    with pytest.raises(PBWResidualError):
        pbw_decompose(constant_term, "spin", "b", 1)


def test_parse_expression():
    a = parse_expression("2 x1 d1 - (x2 + 1) d2", "spin", "b", 2)
    b = (multiply(gen("b", 2, "x", 1), gen("b", 2, "d", 1)).scale(2)
         - multiply(gen("b", 2, "x", 2) + unit_element("spin", "b", 2), gen("b", 2, "d", 2)))
    assert a == b
    for bad in ["d3", "x1 +", "(x1", "y1", "x1 * * d1"]:
        with pytest.raises(ValueError):
            parse_expression(bad, "spin", "b", 2)


def test_element_text_and_json():
    a = parse_expression("x1 d1 + 1", "spin", "b", 1)
    assert str(a) == "1 + x1*d1"
    data = a.to_json()
    assert data["terms"][0] == {"word": [], "window": [1], "exp": [0], "coeff": "1"}


@pytest.mark.parametrize("wtype,n,domain", [("b", 1, "int"), ("b", 2, "int"), ("d", 2, "rational")])
def test_matrix_representation_is_multiplicative(wtype, n, domain):
    rng = random.Random(11)
    gens = [gen(wtype, n, k, i) for k in "xd" for i in range(1, n + 1)]
    pairs = [(a, b) for a in gens for b in gens]
    pairs += [(random_element("spin", wtype, n, 2, rng), random_element("spin", wtype, n, -2, rng)) for _ in range(5)]
    for a, b in pairs:
        assert to_matrix(multiply(a, b), domain) == to_matrix(a, domain) @ to_matrix(b, domain)


def test_rank_one_matrix_of_x():
    m = to_matrix(gen("b", 1, "x", 1))
    assert m.rows() == [["0", "x1^2"], ["1", "0"]]


def _count_units(variant, wtype, n, domain):
    group = enumerate_group(wtype, n)
    return sum(1 for v in group for w in group if solve_preimage(matrix_unit(variant, wtype, n, v, w), domain))


def test_matrix_units_type_b_integers():
    assert _count_units("spin", "b", 1, "int") == 4
    assert _count_units("spin", "b", 2, "int") == 64


def test_type_d_units_need_halves():
    assert _count_units("spin", "d", 2, "dyadic") == 16
    assert _count_units("spin", "d", 2, "int") < 16
    group = enumerate_group("d", 2)
    res = solve_preimage(matrix_unit("spin", "d", 2, group[0], group[0]), "int")
    assert not res and "outside int" in res.reason


@pytest.mark.parametrize("variant,wtype,n", [("spin", "b", 1), ("spin", "d", 2), ("even", "a", 2)])
def test_sparse_solver_agrees_with_dense_oracle(variant, wtype, n):
    group = enumerate_group(wtype, n)
    for v in group:
        for w in group:
            m = matrix_unit(variant, wtype, n, v, w)
            assert solve_preimage(m) == solve_preimage_dense(m)


def test_preimage_reproduces_matrix():
    group = enumerate_group("b", 2)
    m = matrix_unit("spin", "b", 2, group[3], group[5])
    a = solve_preimage(m, "int")
    assert to_matrix(a) == m


@pytest.mark.parametrize("wtype,n", [("b", 2), ("d", 2), ("d", 3)])
def test_pbw_evaluation_full_rank(wtype, n):
    for d in range(-4, 5, 2):
        r, size = pbw_rank_check("spin", wtype, n, d)
        assert r == size


@pytest.mark.parametrize("variant", ["spin", "even"])
@pytest.mark.parametrize("wtype,n", [("b", 1), ("b", 2), ("b", 3), ("d", 2), ("d", 3), ("d", 4)])
@pytest.mark.parametrize("what", ["nc", "nh", "pol"])
def test_graded_ranks(variant, wtype, n, what):
    enum = graded_rank(what, variant, wtype, n, 20)
    closed = closed_form_rank(what, variant, wtype, n, 20)
    assert enum.precision == closed.precision == 20
    assert enum.agrees_with(closed)


def test_center_type_b():
    rep = center_check("b", 2, 6)
    assert rep.passed and rep.matches_own_lambda


def test_type_d_center_contains_own_symmetric_ring():
    rep = center_check("d", 2, 6)
    assert rep.direction_i and rep.matches_own_lambda
    # right multiplication by x1*x2 is central and not a polynomial in the squares
    z = pbw_decompose(lambda f: f * parse_polynomial("x1*x2", 2), "spin", "d", 2)
    for k in "xd":
        for i in (1, 2):
            g = gen("d", 2, k, i)
            assert multiply(z, g) == multiply(g, z)
    assert len(z.coefficients()) > 1


@pytest.mark.xfail(strict=True, reason="the type D commutant is the larger symmetric ring of type D")
def test_type_d_commutant_is_squares_only():
    assert center_check("d", 2, 8).direction_ii


def test_nilcoxeter_size():
    s = graded_rank("nc", "spin", "d", 3, 0)
    assert sum(s.coeffs.values()) == 24
    assert s.valuation() == -2 * length(longest_element("d", 3))
