"""Unit tests for Dynkin factorizations."""

from fractions import Fraction

import pytest

from errors import NonGenericStability, NotDynkin
from quivers.catalog import dynkin_quiver
from quivers.quiver import Stability, load_stability
from quivers.roots import positive_roots
from services.dynkin import dynkin_factorization, find_generic_stability, root_factors
from services.hn_recursion import HNContext


class TestFindGenericStability:
    def test_linear_a3(self, a3_linear):
        assert a3_linear.vertices == ("1", "2", "3")
        assert find_generic_stability(a3_linear).weights == (0, 1, 3)

    def test_alternating_a3(self, a3_alternating):
        """Weights follow the admissible order, here 1, 3, 2."""
        assert a3_alternating.vertices == ("1", "3", "2")
        theta = find_generic_stability(a3_alternating)
        assert theta.weights == (0, 1, 3)
        assert theta == load_stability(a3_alternating, {"1": 0, "2": 3, "3": 1})

    def test_not_dynkin(self, k3):
        with pytest.raises(NotDynkin):
            find_generic_stability(k3)

    @pytest.mark.slow
    def test_d4_needs_every_root_stable(self):
        """Under 2^k - 1 the subrep 2+4 destabilizes the root 2+3+4."""
        d4 = dynkin_quiver("D4")
        roots = positive_roots(d4)
        first_family = HNContext(d4, Stability((0, 1, 3, 7)))
        assert len(root_factors(first_family, roots, 5)) < len(roots)
        theta = find_generic_stability(d4)
        factors = root_factors(HNContext(d4, theta), roots, 5)
        assert sorted(alpha for _, alpha in factors) == sorted(roots)


class TestDynkinFactorization:
    def test_a3_linear(self, a3_linear, mock_logger):
        report = dynkin_factorization(a3_linear, None, 3, mock_logger)
        assert report.ok, report.discrepancies
        assert len(report.details["roots"]) == 6
        assert report.details["theta"] == [0, 1, 3]
        mock_logger.info.assert_called_once()

    def test_a2(self, a2, mock_logger):
        report = dynkin_factorization(a2, None, 6, mock_logger)
        assert report.ok
        assert len(report.details["roots"]) == 3

    def test_a3_alternating_with_given_stability(self, a3_alternating_ctx, mock_logger):
        quiver = a3_alternating_ctx.quiver
        report = dynkin_factorization(quiver, a3_alternating_ctx.theta, 3, mock_logger)
        assert report.ok, report.discrepancies
        assert sorted(report.details["roots"]) == sorted(
            quiver.format(alpha) for alpha in positive_roots(quiver)
        )

    def test_slopes_decrease(self, a3_linear, mock_logger):
        report = dynkin_factorization(a3_linear, None, 3, mock_logger)
        slopes = [Fraction(mu) for mu in report.details["slopes"]]
        assert slopes == sorted(slopes, reverse=True)
        assert len(set(slopes)) == len(slopes)

    def test_truncation_drops_large_roots(self, a3_linear, mock_logger):
        """At N = 2 only the roots of total dimension <= 2 appear."""
        report = dynkin_factorization(a3_linear, None, 2, mock_logger)
        assert report.ok, report.discrepancies
        assert len(report.details["roots"]) == 5

    def test_trivial_stability_is_not_generic(self, a3_linear, mock_logger):
        with pytest.raises(NonGenericStability) as exc_info:
            dynkin_factorization(a3_linear, Stability((0, 0, 0)), 3, mock_logger)
        assert exc_info.value.slope == 0
        assert len(exc_info.value.roots) == 6

    def test_not_dynkin(self, k3, mock_logger):
        with pytest.raises(NotDynkin):
            dynkin_factorization(k3, Stability((0, 1)), 3, mock_logger)

    @pytest.mark.slow
    @pytest.mark.parametrize("fixture_name", ["a3_linear", "a3_alternating"])
    def test_identity_up_to_six(self, request, fixture_name, mock_logger):
        report = dynkin_factorization(
            request.getfixturevalue(fixture_name), None, 6, mock_logger
        )
        assert report.ok, report.discrepancies
        assert len(report.details["roots"]) == 6

    @pytest.mark.slow
    def test_d4(self, mock_logger):
        d4 = dynkin_quiver("D4")
        theta = load_stability(d4, {"1": 0, "2": 2, "3": 5, "4": 6})
        report = dynkin_factorization(d4, theta, 5, mock_logger)
        assert report.ok, report.discrepancies
        assert len(report.details["roots"]) == 12


@pytest.mark.parametrize(
    "label, orientation, first, second",
    [
        ("A2", "linear", {"1": 0, "2": 1}, {"1": 2, "2": 7}),
        ("A3", "linear", {"1": 0, "2": 1, "3": 3}, {"1": 0, "2": 2, "3": 5}),
        ("A3", "alternating", {"1": 0, "2": 3, "3": 1}, {"1": 1, "2": 5, "3": 0}),
        pytest.param(
            "D4",
            "linear",
            {"1": 0, "2": 2, "3": 5, "4": 6},
            {"1": 0, "2": 3, "3": 7, "4": 8},
            marks=pytest.mark.slow,
        ),
    ],
)
def test_root_multiset_does_not_depend_on_stability(label, orientation, first, second):
    quiver = dynkin_quiver(label, orientation)
    roots = positive_roots(quiver)
    order = max(alpha.dim for alpha in roots)
    found = []
    for weights in (first, second):
        theta = load_stability(quiver, weights)
        factors = root_factors(HNContext(quiver, theta), roots, order)
        found.append(sorted(alpha for _, alpha in factors))
    assert load_stability(quiver, first) != load_stability(quiver, second)
    assert found[0] == found[1] == sorted(roots)

