"""Unit tests for conjugation series, certification and smooth-model tables."""

from fractions import Fraction

import pytest

from algebra.qbinomial import qbinom
from algebra.rational_functions import QLaurent, QRational
from algebra.skew_series import SkewSeries
from errors import IntegralityFailure, NotCoprime, PreconditionViolation
from quivers.quiver import DimVector, Functional
from quivers.roots import real_roots
from services.hn_recursion import series_P, series_Pmu, series_real_root
from services.wallcross import (
    ConjugationSeries,
    certify_integral,
    certify_inverse,
    certify_product,
    check_slope_invariance,
    conjugation_series,
    euler_table,
    poincare_stable,
    real_root_closed_form,
    smooth_model_table,
    verify_integrality,
)

HALF = Fraction(1, 2)


@pytest.mark.parametrize("n", range(7))
def test_grassmannian_coefficients(q0_ctx, n):
    """For one vertex the coefficient of Q^{n.} at t^d is [n choose d]_q."""
    base = series_P(q0_ctx, 6)
    cs = certify_integral(conjugation_series(base, Functional((n,)), slope=Fraction(0)))
    for d in range(1, 7):
        assert cs.certified.get(DimVector((d,)), QLaurent(())) == qbinom(n, d)


def test_grassmannian_table(q0_ctx):
    table = smooth_model_table(q0_ctx, Fraction(0), [Functional((4,))], 6)
    assert table.rows[(DimVector((2,)), Functional((4,)))].euler == 6
    assert table.rows[(DimVector((5,)), Functional((4,)))].euler == 0


@pytest.mark.parametrize("order", [6, pytest.param(8, marks=pytest.mark.slow)])
def test_double_arrow_euler_values(k2_ctx, order):
    """Q_{1/2}^i at q = 1 is sum (k + 1)(x_i x_j)^k."""
    framings = [Functional.unit(2, 0), Functional.unit(2, 1)]
    table = smooth_model_table(k2_ctx, HALF, framings, order)
    for k in range(1, order // 2 + 1):
        assert table.rows[(DimVector((k, k)), Functional((1, 0)))].euler == k + 1
        assert table.rows[(DimVector((k, k)), Functional((0, 1)))].euler == k + 1


def test_euler_table_covers_every_slope(k1_ctx):
    tables = euler_table(k1_ctx, 3)
    assert list(tables) == sorted(tables, reverse=True)
    assert tables[HALF].rows[(DimVector((1, 1)), Functional((1, 0)))].euler == 1


def test_non_framing_is_rejected(k2_ctx):
    with pytest.raises(PreconditionViolation):
        smooth_model_table(k2_ctx, HALF, [Functional((1, -1))], 4)


def test_planted_non_integral_series(q0):
    """1 + t/2 is not in S."""
    half = QRational.from_fraction(Fraction(1, 2))
    base = SkewSeries(q0, 3, {(0,): QRational.one(), (1,): half})
    with pytest.raises(IntegralityFailure) as exc_info:
        certify_integral(conjugation_series(base, Functional((1,))))
    assert exc_info.value.dim_vector == "1"


def test_negative_coefficient_fails_for_framings(q0):
    """Negative functionals may twist; Poincare coefficients stay nonnegative."""
    base = series_real_root(q0, (1,), 3)
    plain = certify_integral(conjugation_series(base, Functional((-1,))))
    assert plain.certified[DimVector((1,))] == QLaurent.monomial(-1, -1)
    flipped = ConjugationSeries(
        base=base, eta=Functional((1,)), value=plain.value, slope=Fraction(0)
    )
    with pytest.raises(IntegralityFailure):
        certify_integral(flipped)


def test_stable_poincare_polynomials(k2_ctx, k3_ctx):
    assert poincare_stable(k2_ctx, (1, 1)) == QLaurent.from_dict({0: 1, 1: 1})
    assert poincare_stable(k3_ctx, (1, 1)) == QLaurent.from_dict({0: 1, 1: 1, 2: 1})


def test_stable_poincare_needs_coprime(k1_ctx):
    with pytest.raises(NotCoprime) as exc_info:
        poincare_stable(k1_ctx, (2, 2))
    assert exc_info.value.witness == "i+j"


def test_slope_invariance(k2_ctx):
    i, j, doubled = Functional((1, 0)), Functional((0, 1)), Functional((2, 0))
    assert check_slope_invariance(k2_ctx, HALF, i, j, 4)
    with pytest.raises(PreconditionViolation):
        check_slope_invariance(k2_ctx, HALF, i, doubled, 4)


@pytest.mark.parametrize("eta", [(3,), (-2,), (0,)])
def test_real_root_closed_form(q0, eta):
    base = series_real_root(q0, (1,), 5)
    expected = real_root_closed_form(q0, DimVector((1,)), Functional(eta), 5)
    assert conjugation_series(base, Functional(eta)).value == expected


def test_inverse_and_product_stay_in_s(k2_ctx):
    p_half = series_Pmu(k2_ctx, HALF, 4)
    p_one = series_Pmu(k2_ctx, Fraction(1), 4)
    assert len(certify_inverse(p_half)) == 2
    assert all(cs.certified for cs in certify_product(p_half, p_one))


@pytest.mark.parametrize("ctx_name", ["q0_ctx", "k1_ctx", "k2_ctx", "a3_linear_ctx"])
def test_integrality_suite(request, ctx_name, mock_logger):
    report = verify_integrality(request.getfixturevalue(ctx_name), 4, mock_logger)
    assert report.ok, report.discrepancies
    assert report.checks > 0
    mock_logger.info.assert_called_once()


@pytest.mark.slow
@pytest.mark.parametrize(
    "ctx_name",
    ["k1_ctx", "k2_ctx", "k3_ctx", "a3_linear_ctx", "a3_alternating_ctx"],
)
def test_integrality_suite_up_to_eight(request, ctx_name, mock_logger):
    report = verify_integrality(request.getfixturevalue(ctx_name), 8, mock_logger)
    assert report.ok, report.discrepancies


def test_closed_form_covers_non_simple_real_roots(k1_ctx, a3_linear_ctx, mock_logger):
    """i+j on K_1 and 1+2, 1+2+3 on linear A_3 are real roots but not simple."""
    report = verify_integrality(k1_ctx, 3, mock_logger)
    assert report.ok, report.discrepancies
    assert report.details["real_roots"] == ["i", "j", "i+j"]
    report = verify_integrality(a3_linear_ctx, 3, mock_logger)
    assert report.ok, report.discrepancies
    assert {"1+2", "2+3", "1+2+3"} <= set(report.details["real_roots"])


def test_real_roots_of_the_double_arrow(k2):
    """On K_2 the real roots are the d with |a - b| = 1, never (1,1)."""
    expected = [(1, 0), (0, 1), (2, 1), (1, 2)]
    assert real_roots(k2, 3) == [DimVector(d) for d in expected]
