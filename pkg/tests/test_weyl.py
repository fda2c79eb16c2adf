import itertools

import pytest

from spin_nilhecke.weyl import (
    SignedPermutation, bfs_lengths, compose, enumerate_group, evaluate_word, generator, group_order,
    identity, inverse, length, longest_element, longest_word, parse_element, reduced_word, right_descents,
)

CASES = [("a", 1), ("a", 2), ("a", 3), ("a", 4), ("b", 1), ("b", 2), ("b", 3), ("b", 4), ("d", 2), ("d", 3), ("d", 4)]


@pytest.mark.parametrize("wtype,n,order", [("a", 4, 24), ("b", 3, 48), ("b", 4, 384), ("d", 3, 24), ("d", 4, 192)])
def test_group_orders(wtype, n, order):
    assert group_order(wtype, n) == order
    assert len(enumerate_group(wtype, n)) == order


@pytest.mark.parametrize("wtype,n", CASES)
def test_length_matches_breadth_first_search(wtype, n):
    dist = bfs_lengths(wtype, n)
    assert len(dist) == group_order(wtype, n)
    assert all(length(w) == d for w, d in dist.items())


@pytest.mark.parametrize("wtype,n", CASES)
def test_reduced_words_evaluate_back(wtype, n):
    for w in enumerate_group(wtype, n):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert evaluate_word(wtype, n, word) == w


@pytest.mark.parametrize("wtype,n", CASES)
def test_longest_element(wtype, n):
    w0 = longest_element(wtype, n)
    top = max(length(w) for w in enumerate_group(wtype, n))
    assert length(w0) == top == len(longest_word(wtype, n))
    assert evaluate_word(wtype, n, longest_word(wtype, n)) == w0
    assert sorted(right_descents(w0)) == sorted(set(longest_word(wtype, n)))


def test_longest_lengths():
    assert length(longest_element("b", 4)) == 16
    assert length(longest_element("d", 4)) == 12
    assert longest_element("d", 3).window == (-1, -2, 3)
    assert longest_element("d", 4).window == (-1, -2, -3, -4)


@pytest.mark.parametrize("wtype,n", [("b", 3), ("d", 3)])
def test_group_axioms(wtype, n):
    group = enumerate_group(wtype, n)
    e = identity(wtype, n)
    for u, v in itertools.islice(itertools.product(group, group), 400):
        assert compose(u, inverse(u)) == e
        assert length(u * v) <= length(u) + length(v)
        assert (u * v)(1) == u(v(1))


def test_composition_convention():
    s1, s2 = generator("b", 2, 1), generator("b", 2, 2)
    assert (s1 * s2).window == (2, -1)
    assert evaluate_word("b", 2, (1, 2)) == s1 * s2


def test_parse_element_forms():
    assert parse_element("[2,-1]", "b", 2) == parse_element("s1 s2", "b", 2)
    assert parse_element("e", "d", 3) == identity("d", 3)
    with pytest.raises(ValueError):
        parse_element("[1,-2]", "d", 2)  # odd number of sign changes
    with pytest.raises(ValueError):
        parse_element("[1,2,3]", "b", 2)
    with pytest.raises(ValueError):
        parse_element("s3", "b", 2)


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1), "b")
    with pytest.raises(ValueError):
        SignedPermutation((2, -1), "a")


def test_canonical_order_starts_with_identity():
    group = enumerate_group("d", 3)
    assert group[0] == identity("d", 3)
    assert [length(w) for w in group] == sorted(length(w) for w in group)
