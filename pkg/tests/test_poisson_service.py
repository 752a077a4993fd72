"""Unit tests for Poisson automorphisms and the wall-crossing factorization."""

from fractions import Fraction

import pytest

from algebra.comm_series import CommSeries, unit_power
from errors import IncompatibleSeries, ZeroDimVector
from quivers.quiver import Stability
from services.hn_recursion import HNContext, series_Pmu, series_real_root
from services.poisson_service import (
    PoissonAuto,
    check_poisson_property,
    compose,
    compose_all,
    invert_auto,
    phi,
    phi_via_vertex_series,
    slope_automorphisms,
    t_d,
    verify_main_theorem,
    verify_poisson,
    vertex_composition,
)


def test_t_d_multipliers(k1):
    """T_i fixes x_i and sends x_j to x_j (1 + x_i)."""
    one = CommSeries.one(k1, 3)
    auto = t_d(k1, (1, 0), 3)
    assert auto.multipliers == (one, one + CommSeries.variable(k1, 3, 0))


def test_t_d_of_zero(k1):
    with pytest.raises(ZeroDimVector):
        t_d(k1, (0, 0), 3)


def test_multiplier_count_is_checked(k1):
    with pytest.raises(IncompatibleSeries):
        PoissonAuto(k1, 3, (CommSeries.one(k1, 3),))


def test_composition_applies_inner_first(k1):
    """T_i o T_j and T_j o T_i differ, so the order matters."""
    t_i, t_j = t_d(k1, (1, 0), 4), t_d(k1, (0, 1), 4)
    assert compose(t_i, t_j) != compose(t_j, t_i)
    assert compose_all([t_i, t_j], k1, 4) == compose(t_i, t_j)
    assert vertex_composition(k1, 4) == compose(t_i, t_j)


def test_inverse(k2):
    auto = t_d(k2, (1, 1), 5)
    identity = PoissonAuto.identity(k2, 5)
    inverse = invert_auto(auto)
    assert compose(auto, inverse) == identity
    assert compose(inverse, auto) == identity
    assert identity.is_identity()


@pytest.mark.parametrize("d", [(1, 0), (0, 1), (1, 1), (2, 1)])
def test_t_d_preserves_bracket(k2, d):
    assert check_poisson_property(t_d(k2, d, 4)) == []


def test_broken_automorphism_is_caught(k2):
    """x_i -> x_i (1 + x_i) breaks the bracket.

    It sends {x_i, x_j} to 2 x_i x_j + 2 x_i^2 x_j, not 2 x_i x_j + 4 x_i^2 x_j.
    """
    one = CommSeries.one(k2, 3)
    broken = PoissonAuto(k2, 3, (one + CommSeries.variable(k2, 3, 0), one))
    failures = check_poisson_property(broken)
    assert len(failures) == 1
    assert failures[0][:2] == (0, 1)


def test_phi_of_simple_root(k1):
    """Phi(P_i) = T_i."""
    assert phi(series_real_root(k1, (1, 0), 4)) == t_d(k1, (1, 0), 4)
    assert phi(series_real_root(k1, (0, 1), 4)) == t_d(k1, (0, 1), 4)


def test_phi_forms_agree(k2_ctx):
    base = series_Pmu(k2_ctx, Fraction(1, 2), 4)
    assert phi(base) == phi_via_vertex_series(base)


def test_double_arrow_half_slope(k2_ctx):
    """T_{1/2}: x_i -> x_i (1 - x_i x_j)^4, x_j -> x_j (1 - x_i x_j)^-4."""
    quiver = k2_ctx.quiver
    base = CommSeries.one(quiver, 6) - CommSeries.monomial(quiver, 6, (1, 1))
    expected = PoissonAuto(quiver, 6, (unit_power(base, 4), unit_power(base, -4)))
    assert slope_automorphisms(k2_ctx, 6)[Fraction(1, 2)] == expected


FACTORIZATION_CONTEXTS = [
    "q0_ctx",
    "k1_ctx",
    "k2_ctx",
    "k3_ctx",
    "a3_linear_ctx",
    "a3_alternating_ctx",
]


@pytest.mark.parametrize("ctx_name", FACTORIZATION_CONTEXTS)
def test_factorization(request, ctx_name, mock_logger):
    report = verify_main_theorem(request.getfixturevalue(ctx_name), 4, mock_logger)
    assert report.ok, report.discrepancies
    mock_logger.info.assert_called_once()


@pytest.mark.slow
@pytest.mark.parametrize("ctx_name", FACTORIZATION_CONTEXTS)
def test_factorization_up_to_six(request, ctx_name, mock_logger):
    report = verify_main_theorem(request.getfixturevalue(ctx_name), 6, mock_logger)
    assert report.ok, report.discrepancies


def test_factorization_lists_single_arrow_slopes(k1_ctx, mock_logger):
    report = verify_main_theorem(k1_ctx, 4, mock_logger)
    assert report.details["slopes"] == ["1", "1/2", "0"]


def test_factorization_with_non_generic_stability(k2, mock_logger):
    """Theta = 0 puts everything in one slope class; the identity still holds."""
    report = verify_main_theorem(HNContext(k2, Stability((0, 0))), 4, mock_logger)
    assert report.ok, report.discrepancies
    assert report.details["slopes"] == ["0"]


@pytest.mark.parametrize("seed", [0, 11])
def test_poisson_suite(k2_ctx, seed, mock_logger):
    report = verify_poisson(k2_ctx, 4, seed=seed, samples=5, logger=mock_logger)
    assert report.ok, report.discrepancies
    mock_logger.info.assert_called_once()


def test_poisson_suite_on_dynkin(a3_alternating_ctx, mock_logger):
    report = verify_poisson(a3_alternating_ctx, 3, logger=mock_logger)
    assert report.ok, report.discrepancies
