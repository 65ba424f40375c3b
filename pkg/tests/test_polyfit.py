from fractions import Fraction

import pytest

from hkdet import ExactPolynomial, hk_closed, interpolate_hk, leading_coefficient
from hkdet.polyfit import PolynomialityError, newton_interpolate


def test_one_by_one():
    p = interpolate_hk(1, 1)
    assert p.coefficients == (0, 1)
    assert p.degree == 1
    assert leading_coefficient(p) == 1


def test_two_by_two():
    p = interpolate_hk(2, 2)
    assert p.coefficients == (0, Fraction(-1, 3), 0, Fraction(4, 3))
    assert leading_coefficient(p) == Fraction(4, 3)
    assert str(p) == "4/3*q^3 - 1/3*q"


@pytest.mark.parametrize("n", range(1, 5))
def test_single_row_is_power(n):
    p = interpolate_hk(1, n)
    assert p.coefficients == (0,) * n + (1,)
    assert leading_coefficient(p) == 1


def test_transposed_leading_coefficients_agree():
    for m in range(1, 5):
        for n in range(1, 5):
            assert leading_coefficient(interpolate_hk(m, n)) == leading_coefficient(
                interpolate_hk(n, m)
            )


def test_newton_recovers_known_polynomial():
    f = ExactPolynomial((Fraction(1, 2), -3, 0, Fraction(7, 5)))
    xs = [-2, 0, 1, 5]
    assert newton_interpolate(xs, [f(x) for x in xs]) == f


def test_newton_validation():
    with pytest.raises(ValueError):
        newton_interpolate([1, 1], [2, 3])
    with pytest.raises(ValueError):
        newton_interpolate([], [])


def test_trailing_zeros_trimmed_and_zero_polynomial():
    assert ExactPolynomial((1, 2, 0, 0)).degree == 1
    zero = ExactPolynomial((0, 0))
    assert zero.is_zero() and str(zero) == "0"
    with pytest.raises(ValueError):
        leading_coefficient(zero)


def test_consistency_failure_is_raised(monkeypatch):
    import hkdet.polyfit as polyfit

    monkeypatch.setattr(polyfit, "hk_closed", lambda m, n, q: q**5)
    with pytest.raises(PolynomialityError):
        polyfit.interpolate_hk(1, 2)


def test_fit_evaluates_at_check_points():
    p = interpolate_hk(3, 2, check_upto=40)
    assert all(p(q) == hk_closed(3, 2, q) for q in range(0, 41))
