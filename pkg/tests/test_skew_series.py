"""Unit tests for the skew power series ring."""

import random

import pytest

from algebra.comm_series import CommSeries
from algebra.rational_functions import QRational
from algebra.skew_series import (
    SkewSeries,
    descending_product,
    invert,
    mul,
    q_power,
    restrict_slope,
    specialize_q1,
    twist,
)
from errors import (
    IncompatibleSeries,
    MixedSlopeFactor,
    NonUnitConstantTerm,
    PoleAtOne,
    UnnormalizedFactor,
)
from quivers.quiver import Functional, Stability
from services.hn_recursion import series_P

Q = QRational.q_power(1)
ONE = QRational.one()

# (quiver fixture, truncation order) pairs for the randomized ring identities
RING_CASES = [("k1", 4), ("k2", 4), ("a3_linear", 3)]


def random_coefficient(rng):
    value = QRational.from_int(rng.randint(-3, 3)) * q_power(rng.randint(-2, 2))
    if rng.random() < 0.3:
        value = value + QRational.from_int(rng.randint(1, 2)) / (Q - ONE)
    return value


def random_series(quiver, order, rng, unit=False):
    coefficients = {
        d: random_coefficient(rng)
        for d in quiver.dimension_vectors(order)
        if rng.random() < 0.6
    }
    coefficients[quiver.zero()] = ONE if unit else random_coefficient(rng)
    return SkewSeries(quiver, order, coefficients)


def random_functional(quiver, rng):
    return Functional(tuple(rng.randint(-2, 3) for _ in range(quiver.rank)))


def scalar(quiver, order, value):
    return SkewSeries.monomial(quiver, order, quiver.zero(), value)


def test_product_is_twisted(k1):
    """t^i t^j = q^(-<j,i>) t^(i+j) = q t^(i+j) while t^j t^i = t^(i+j)."""
    t_i = SkewSeries.monomial(k1, 2, (1, 0))
    t_j = SkewSeries.monomial(k1, 2, (0, 1))
    assert mul(t_i, t_j).coefficient((1, 1)) == Q
    assert mul(t_j, t_i).coefficient((1, 1)) == ONE


def test_truncation(k1):
    t_i = SkewSeries.monomial(k1, 1, (1, 0))
    assert mul(t_i, t_i).coefficients == {}


def test_inverse(k2_ctx):
    p = series_P(k2_ctx, 4)
    one = SkewSeries.one(k2_ctx.quiver, 4)
    assert mul(p, invert(p)) == one
    assert mul(invert(p), p) == one


def test_inverse_needs_unit(k1):
    with pytest.raises(NonUnitConstantTerm):
        invert(SkewSeries.monomial(k1, 3, (0, 0), QRational.from_int(2)))


def test_incompatible_orders(k1):
    with pytest.raises(IncompatibleSeries):
        mul(SkewSeries.one(k1, 2), SkewSeries.one(k1, 3))


def test_twist(k1):
    series = SkewSeries(k1, 3, {(0, 0): ONE, (1, 1): ONE})
    twisted = twist(series, Functional((1, 0)))
    assert twisted.coefficient((1, 1)) == Q
    assert twisted.constant_term == ONE


def test_restrict_slope(k1_ctx):
    p = series_P(k1_ctx, 3)
    restricted = restrict_slope(p, k1_ctx.theta, 1)
    assert set(restricted.coefficients) == {(0, 0), (0, 1), (0, 2), (0, 3)}


def test_descending_product_checks_factors(k1):
    theta = Stability((0, 1))
    good = SkewSeries(k1, 2, {(0, 0): ONE, (0, 1): ONE})
    not_normalized = SkewSeries(k1, 2, {(0, 0): Q, (1, 0): ONE})
    mixed = SkewSeries(k1, 2, {(0, 0): ONE, (1, 0): ONE, (1, 1): ONE})
    with pytest.raises(UnnormalizedFactor):
        descending_product({1: good, 0: not_normalized}, theta, k1, 2)
    with pytest.raises(MixedSlopeFactor):
        descending_product({1: good, 0: mixed}, theta, k1, 2)
    with pytest.raises(IncompatibleSeries):
        descending_product({1: good}, theta, k1, 3)
    assert descending_product({1: good}, theta, k1, 2) == good


def test_descending_product_of_nothing_is_one(k1):
    assert descending_product({}, Stability((0, 1)), k1, 3) == SkewSeries.one(k1, 3)


def test_descending_product_orders_by_slope(k1):
    """The factor of larger slope sits on the left whatever the mapping order."""
    theta = Stability((0, 1))
    p_j = SkewSeries(k1, 2, {(0, 0): ONE, (0, 1): ONE})
    p_i = SkewSeries(k1, 2, {(0, 0): ONE, (1, 0): ONE})
    assert descending_product({0: p_i, 1: p_j}, theta, k1, 2) == mul(p_j, p_i)


def test_specialize_at_one(k1):
    series = SkewSeries(k1, 2, {(0, 0): ONE, (1, 0): Q + ONE})
    assert specialize_q1(series) == CommSeries(k1, 2, {(0, 0): 1, (1, 0): 2})
    with pytest.raises(PoleAtOne) as exc_info:
        specialize_q1(SkewSeries(k1, 2, {(0, 0): ONE, (1, 0): ONE / (Q - ONE)}))
    assert exc_info.value.dim_vector == (1, 0)


class TestRingIdentities:
    @pytest.mark.parametrize("quiver_name, order", RING_CASES)
    @pytest.mark.parametrize("seed", range(3))
    def test_associativity(self, request, quiver_name, order, seed):
        quiver = request.getfixturevalue(quiver_name)
        rng = random.Random(seed)
        a, b, c = (random_series(quiver, order, rng) for _ in range(3))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))

    @pytest.mark.parametrize("quiver_name, order", RING_CASES)
    @pytest.mark.parametrize("seed", range(3))
    def test_twist_respects_products(self, request, quiver_name, order, seed):
        quiver = request.getfixturevalue(quiver_name)
        rng = random.Random(seed)
        a, b = random_series(quiver, order, rng), random_series(quiver, order, rng)
        eta = random_functional(quiver, rng)
        assert twist(mul(a, b), eta) == mul(twist(a, eta), twist(b, eta))

    @pytest.mark.parametrize("quiver_name, order", RING_CASES)
    def test_commutation_of_monomials(self, request, quiver_name, order):
        """t^e t^d = q^{e,d} t^d t^e with the skew form {e,d} = <e,d> - <d,e>."""
        quiver = request.getfixturevalue(quiver_name)
        vectors = quiver.dimension_vectors(order // 2)
        for d in vectors:
            for e in vectors:
                t_d = SkewSeries.monomial(quiver, order, d)
                t_e = SkewSeries.monomial(quiver, order, e)
                factor = scalar(quiver, order, q_power(quiver.skew_form(e, d)))
                assert mul(t_e, t_d) == mul(factor, mul(t_d, t_e))

    @pytest.mark.parametrize("quiver_name, order", RING_CASES)
    @pytest.mark.parametrize("seed", range(3))
    def test_cocycle_identity(self, request, quiver_name, order, seed):
        """Q^{eta+nu}(t) = Q^eta(q^nu t) Q^nu(t)."""
        quiver = request.getfixturevalue(quiver_name)
        rng = random.Random(seed)
        p = random_series(quiver, order, rng, unit=True)
        eta, nu = random_functional(quiver, rng), random_functional(quiver, rng)

        def conjugate(functional):
            return mul(twist(p, functional), invert(p))

        assert conjugate(eta + nu) == mul(twist(conjugate(eta), nu), conjugate(nu))

    @pytest.mark.parametrize("quiver_name, order", RING_CASES)
    @pytest.mark.parametrize("seed", range(3))
    def test_inverse_twist_identity(self, request, quiver_name, order, seed):
        """Q^{-eta}(t) = Q^eta(q^{-eta} t)^-1."""
        quiver = request.getfixturevalue(quiver_name)
        rng = random.Random(seed)
        p = random_series(quiver, order, rng, unit=True)
        eta = random_functional(quiver, rng)
        q_eta = mul(twist(p, eta), invert(p))
        q_minus_eta = mul(twist(p, -eta), invert(p))
        assert q_minus_eta == invert(twist(q_eta, -eta))
