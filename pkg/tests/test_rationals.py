from fractions import Fraction

import pytest

from hurwitzlab.rationals import (
    bernoulli,
    double_factorial,
    pochhammer,
    rational_from_str,
    rational_to_str,
)


def test_bernoulli_convention():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)


def test_bernoulli_odd_vanish():
    for n in range(1, 10):
        assert bernoulli(2 * n + 1) == 0


def test_bernoulli_against_egf():
    # independent oracle: z/(e^z - 1) = sum B_n z^n / n!
    from math import factorial

    from hurwitzlab.series import Series, exp_series

    order = 12
    em1_over_z = Series(0, exp_series(order + 1).coeffs[1:], order)  # (e^z-1)/z
    egf = em1_over_z.reciprocal(order)
    for n in range(order):
        assert bernoulli(n) == egf.coeff(n) * factorial(n)


def test_pochhammer_examples():
    assert pochhammer(3, -1) == Fraction(1, 3)
    assert pochhammer(0, 5) == 120
    assert pochhammer(2, 2) == 12


def test_pochhammer_inverse_pairing():
    for a in range(-4, 6):
        for k in range(-4, 5):
            try:
                lhs = pochhammer(a, k)
            except ZeroDivisionError:
                continue
            try:
                rhs = pochhammer(a + k, -k)
            except ZeroDivisionError:
                continue
            assert lhs * rhs == 1, (a, k)


def test_pochhammer_zero_factor_reported():
    with pytest.raises(ZeroDivisionError):
        pochhammer(2, -3)  # product 2*1*0


def test_double_factorial():
    assert double_factorial(-1) == 1
    assert double_factorial(1) == 1
    assert double_factorial(5) == 15
    assert double_factorial(7) == 105


def test_rational_string_roundtrip():
    for q in [Fraction(3, 7), Fraction(-22, 8), Fraction(5), Fraction(0)]:
        s = rational_to_str(q)
        assert rational_from_str(s) == q
    assert rational_to_str(Fraction(4, 2)) == "2"
    assert rational_to_str(Fraction(-1, 3)) == "-1/3"
