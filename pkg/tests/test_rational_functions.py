"""Unit tests for exact rational functions in q."""

from fractions import Fraction

import pytest

from algebra.rational_functions import QLaurent, QRational, as_laurent, evaluate
from errors import DivisionByZero, NotLaurentIntegral, PoleAt

Q = QRational.q_power(1)
ONE = QRational.one()


def test_canonical_form_cancels_common_factors():
    """(q^2 - 1)/(q - 1) reduces to q + 1."""
    f = QRational.from_coefficients([-1, 0, 1], [-1, 1])
    assert f == QRational.from_coefficients([1, 1])
    assert f == Q + ONE


def test_sign_of_denominator_is_normalized():
    first = QRational.from_coefficients([1], [1, -1])
    assert first == QRational.from_coefficients([-1], [-1, 1])


def test_arithmetic_with_negative_powers():
    assert QRational.q_power(-2) * QRational.q_power(3) == Q
    assert (Q - ONE) ** -1 * (Q - ONE) == ONE
    assert QRational.q_power(0) == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / QRational.zero()


def test_laurent_parts_factor_out_powers_of_q():
    """q^-2 (1 + q) splits into shift -2 and numerator [1, 1]."""
    f = QRational.from_coefficients([1, 1], shift=-2)
    assert f.laurent_parts() == (-2, [1, 1], [1])


def test_laurent_parts_of_rational():
    shift, numerator, denominator = (ONE / (Q - ONE)).laurent_parts()
    assert shift == 0
    assert numerator == [1]
    assert denominator == [-1, 1]


def test_evaluate_exact():
    assert evaluate(ONE / (Q - ONE), 3) == Fraction(1, 2)
    assert evaluate(QRational.q_power(-1), 2) == Fraction(1, 2)


def test_evaluate_at_pole():
    with pytest.raises(PoleAt) as exc_info:
        evaluate(ONE / (Q - ONE), 1)
    assert exc_info.value.point == 1


def test_as_laurent_accepts_monomial_denominators():
    f = (Q * Q + ONE) / Q
    assert as_laurent(f) == QLaurent.from_dict({-1: 1, 1: 1})


def test_as_laurent_rejects_other_denominators():
    with pytest.raises(NotLaurentIntegral):
        as_laurent(ONE / (Q - ONE))
    with pytest.raises(NotLaurentIntegral):
        as_laurent(QRational.from_coefficients([1], [2]))


def test_laurent_polynomial_helpers():
    p = QLaurent.from_dict({-1: 2, 2: 1, 0: 0})
    assert p.valuation == -1
    assert p.degree == 2
    assert p.coefficient_list() == [2, 0, 0, 1]
    assert p.is_nonnegative()
    assert p.evaluate(1) == 3
    assert not (p - QLaurent.monomial(-1, 3)).is_nonnegative()
    assert QLaurent(()).is_zero
