import pytest

from spin_nilhecke.series import GradedRankSeries, geometric_power, q_double_factorial, q_factorial, q_integer


def test_quantum_integer_text():
    assert str(q_integer(3, pi=True)) == "q^-2 + pi + q^2"
    assert str(q_integer(2, pi=True)) == "q^-1 + pi*q"


def test_factorial_specialises_to_count():
    f = q_factorial(4, pi=True).specialize()
    assert sum(c for c in f.coeffs.values()) == 24
    assert sum(q_double_factorial(6, pi=True).specialize().coeffs.values()) == 48


def test_inverse_times_series_is_one():
    g = geometric_power(2, 2, 1, 30)
    base = GradedRankSeries({(0, 0): 1, (2, 1): -1}) ** 2
    assert (base * g).agrees_with(GradedRankSeries.one(), 30)
    # (1 - pi q^2)^-1 = sum (pi q^2)^k
    h = geometric_power(1, 2, 1, 10)
    assert h.coefficient(6) == (0, 1) and h.coefficient(8) == (1, 0)


def test_pi_squared_is_one():
    pq = GradedRankSeries({(1, 1): 1})
    assert pq * pq == GradedRankSeries({(2, 0): 1})


def test_inverse_requires_unit_leading_coefficient():
    with pytest.raises(ValueError):
        GradedRankSeries({(0, 0): 2}).inverse(5)
    with pytest.raises(ZeroDivisionError):
        GradedRankSeries({}).inverse(5)


def test_truncated_display_and_precision():
    s = geometric_power(1, 2, 0, 4)
    assert str(s) == "1 + q^2 + q^4 + O(q^5)"
    assert s.to_json()["precision"] == 4
