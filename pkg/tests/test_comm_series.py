"""Unit tests for commutative series and the Poisson bracket."""

from fractions import Fraction

import pytest

from algebra.comm_series import CommSeries, bracket, substitute, unit_power
from errors import IncompatibleSeries, NonUnitConstantTerm


def test_unit_powers(k1):
    u = CommSeries.one(k1, 4) + CommSeries.variable(k1, 4, 0)
    assert unit_power(u, -1) * u == CommSeries.one(k1, 4)
    assert unit_power(u, 2).coefficient((1, 0)) == 2
    assert unit_power(u, -2).coefficient((3, 0)) == -4
    assert unit_power(u, 0) == CommSeries.one(k1, 4)


def test_non_unit_power(k1):
    with pytest.raises(NonUnitConstantTerm):
        unit_power(CommSeries.variable(k1, 3, 0), -1)


def test_bracket_of_variables(k1, k2):
    x_i, x_j = CommSeries.variable(k1, 3, 0), CommSeries.variable(k1, 3, 1)
    assert bracket(x_i, x_j) == CommSeries.monomial(k1, 3, (1, 1))
    assert bracket(x_j, x_i) == CommSeries.monomial(k1, 3, (1, 1), -1)
    y_i, y_j = CommSeries.variable(k2, 3, 0), CommSeries.variable(k2, 3, 1)
    assert bracket(y_i, y_j) == CommSeries.monomial(k2, 3, (1, 1), 2)


def test_bracket_is_truncated(k1):
    x_i, x_j = CommSeries.variable(k1, 1, 0), CommSeries.variable(k1, 1, 1)
    assert bracket(x_i, x_j) == CommSeries.zero(k1, 1)


def test_substitute(k1):
    """x_i -> x_i (1 + x_j) sends x_i^2 to x_i^2 (1 + 2 x_j + x_j^2)."""
    order = 4
    one = CommSeries.one(k1, order)
    multipliers = (one + CommSeries.variable(k1, order, 1), one)
    image = substitute(CommSeries.monomial(k1, order, (2, 0)), multipliers)
    expected = {(2, 0): Fraction(1), (2, 1): Fraction(2), (2, 2): Fraction(1)}
    assert dict(image.items()) == expected


def test_mixing_orders(k1):
    with pytest.raises(IncompatibleSeries):
        CommSeries.one(k1, 2) + CommSeries.one(k1, 3)
