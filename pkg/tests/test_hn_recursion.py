"""Unit tests for the Harder-Narasimhan recursion."""

from fractions import Fraction

import pytest

from algebra.rational_functions import QRational, evaluate
from errors import NotRealRoot, PoleAt, ZeroDimVector
from quivers.quiver import DimVector, Stability
from services.hn_recursion import (
    HNContext,
    e_d,
    inverse_q_factorial,
    p_d_recursive,
    p_d_resolved,
    series_P,
    series_Pmu,
    series_real_root,
    slope_series,
    verify_hnsa,
    verify_recursion_agreement,
)
from services.reports import run_subject

Q = QRational.q_power(1)
ONE = QRational.one()


def test_inverse_q_factorial():
    assert inverse_q_factorial(0) == ONE
    assert inverse_q_factorial(1) == Q / (Q - ONE)


def test_single_arrow_values(k1_ctx):
    """e_(1,1) = q/(q-1)^2 and p_(1,1) = 1/(q-1) for K_1."""
    d = DimVector((1, 1))
    assert e_d(k1_ctx, d) == Q / ((Q - ONE) * (Q - ONE))
    assert p_d_recursive(k1_ctx, d) == ONE / (Q - ONE)
    assert e_d(k1_ctx, (1, 0)) == ONE / (Q - ONE)


def test_double_arrow_p(k2_ctx):
    """(q - 1) p_(1,1) = q + 1 for K_2, the Poincare polynomial of P^1."""
    assert (Q - ONE) * p_d_recursive(k2_ctx, (1, 1)) == Q + ONE


def test_unstable_vector_has_no_semistables(k1_ctx):
    """(1,1) under Theta = i^* is destabilized by the subrepresentation at i."""
    ctx = HNContext(k1_ctx.quiver, Stability((1, 0)))
    assert p_d_recursive(ctx, (1, 1)).is_zero


def test_constant_stability_gives_e(k2):
    ctx = HNContext(k2, Stability((0, 0)))
    for d in k2.dimension_vectors(3):
        assert p_d_recursive(ctx, d) == e_d(ctx, d)


def test_single_vertex_point_count(q0_ctx):
    """|R_2| / |GL_2(F_2)| = 1/6."""
    assert evaluate(e_d(q0_ctx, (2,)), 2) == Fraction(1, 6)


def test_zero_vector_is_rejected(k1_ctx):
    with pytest.raises(ZeroDimVector):
        p_d_recursive(k1_ctx, (0, 0))
    with pytest.raises(ZeroDimVector):
        p_d_resolved(k1_ctx, (0, 0))


CONTEXTS = [
    "k1_ctx",
    "k2_ctx",
    "k3_ctx",
    "a3_linear_ctx",
    "a3_alternating_ctx",
    "a3_linear_other_ctx",
    "a3_alternating_other_ctx",
]


@pytest.mark.parametrize("ctx_name", ["q0_ctx"] + CONTEXTS)
def test_e_d_pole_order_is_total_dimension(request, ctx_name):
    """(q - 1)^dim d e_d is finite and non-zero at q = 1, one power less is not."""
    ctx = request.getfixturevalue(ctx_name)
    for d in ctx.quiver.dimension_vectors(4):
        value = e_d(ctx, d)
        assert evaluate((Q - ONE) ** d.dim * value, 1) != 0
        with pytest.raises(PoleAt):
            evaluate((Q - ONE) ** (d.dim - 1) * value, 1)


@pytest.mark.parametrize("ctx_name", CONTEXTS)
def test_recursions_agree(request, ctx_name, mock_logger):
    ctx = request.getfixturevalue(ctx_name)
    report = verify_recursion_agreement(ctx, 4, mock_logger)
    assert report.ok, report.discrepancies
    assert report.checks == len(ctx.quiver.dimension_vectors(4))
    mock_logger.info.assert_called_once()


@pytest.mark.slow
@pytest.mark.parametrize("ctx_name", CONTEXTS)
def test_recursions_agree_up_to_eight(request, ctx_name, mock_logger):
    ctx = request.getfixturevalue(ctx_name)
    report = verify_recursion_agreement(ctx, 8, mock_logger)
    assert report.ok, report.discrepancies


@pytest.mark.parametrize("ctx_name", ["q0_ctx"] + CONTEXTS)
def test_hn_factorizations(request, ctx_name, mock_logger):
    """Vertex product and descending slope product both give P."""
    report = verify_hnsa(request.getfixturevalue(ctx_name), 4, mock_logger)
    assert report.ok, report.discrepancies
    assert report.checks == 2


@pytest.mark.slow
@pytest.mark.parametrize("ctx_name", ["q0_ctx"] + CONTEXTS)
def test_hn_factorizations_up_to_eight(request, ctx_name, mock_logger):
    report = verify_hnsa(request.getfixturevalue(ctx_name), 8, mock_logger)
    assert report.ok, report.discrepancies


def test_slope_series_keys_decrease(k2_ctx):
    keys = list(slope_series(k2_ctx, 4))
    assert keys == sorted(keys, reverse=True)
    assert Fraction(1, 2) in keys


def test_series_pmu_support(k2_ctx):
    p_half = series_Pmu(k2_ctx, Fraction(1, 2), 4)
    assert set(p_half.coefficients) == {(0, 0), (1, 1), (2, 2)}


def test_real_root_series(q0, k2):
    """For a single vertex P_(1) is the whole of P."""
    ctx = HNContext(q0, Stability((0,)))
    assert series_real_root(q0, (1,), 4) == series_P(ctx, 4)
    with pytest.raises(NotRealRoot) as exc_info:
        series_real_root(k2, (1, 1), 4)
    assert exc_info.value.value == 0


def test_memo_keeps_first_value(k1_ctx):
    first = p_d_recursive(k1_ctx, (1, 1))
    assert k1_ctx.remember_p(DimVector((1, 1)), ONE) == first
    assert k1_ctx.memoized_p()[DimVector((1, 1))] == first


def test_report_subject_names_the_run(k1_ctx, mock_logger):
    report = verify_hnsa(k1_ctx, 2, mock_logger)
    assert report.subject == run_subject(k1_ctx.quiver, k1_ctx.theta, 2)
    assert report.subject.endswith(f"theta={k1_ctx.theta.weights} N=2")
