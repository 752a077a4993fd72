"""Dynkin quivers: factorization into one automorphism per positive root."""

import logging
from itertools import product
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from errors import NonGenericStability
from quivers.quiver import (
    DimVector,
    Quiver,
    Slope,
    Stability,
    slope,
    slope_classes,
)
from quivers.roots import positive_roots
from services.hn_recursion import HNContext, series_Pmu, series_real_root
from services.poisson_service import compose_all, t_d, vertex_composition
from services.reports import Report, run_subject
from utils.logger import get_logger, log_with_context
from utils.timing import timing_decorator

logger = get_logger(__name__)

# weights along the admissible order, tried in turn by find_generic_stability
STABILITY_FAMILIES: Tuple[Callable[[int], int], ...] = (
    lambda k: 2**k - 1,
    lambda k: k * k,
    lambda k: 3**k - 1,
    lambda k: k,
    lambda k: k**3,
)

# fallback search: largest weight, and cap on candidates given the full check
SEARCH_BOUND = 8
SEARCH_LIMIT = 400


def root_factors(
    ctx: HNContext, roots: Sequence[DimVector], order: int
) -> List[Tuple[Slope, DimVector]]:
    """(mu, alpha) for every slope class with P_mu != 1, in decreasing slope order.

    Raises:
        NonGenericStability: If a class does not hold exactly one root alpha
            with P_mu = P_alpha
    """
    quiver = ctx.quiver
    factors = []
    for mu in slope_classes(quiver, ctx.theta, order):
        base = series_Pmu(ctx, mu, order)
        if base.is_one():
            continue
        members = [alpha for alpha in roots if ctx.mu(alpha) == mu]
        if len(members) != 1:
            raise NonGenericStability(mu, [quiver.format(alpha) for alpha in members])
        alpha = members[0]
        if base != series_real_root(quiver, alpha, order):
            raise NonGenericStability(mu, [quiver.format(alpha)])
        factors.append((mu, alpha))
    return factors


def _passes_quick_checks(
    quiver: Quiver, theta: Stability, roots: Sequence[DimVector]
) -> bool:
    """Distinct root slopes and theta_t < theta_s along every arrow s -> t."""
    if len({slope(theta, alpha) for alpha in roots}) != len(roots):
        return False
    weights = theta.weights
    return all(weights[target] < weights[source] for source, target in quiver.arrows)


def _candidates(rank: int) -> Iterator[Stability]:
    for family in STABILITY_FAMILIES:
        yield Stability(tuple(family(k) for k in range(rank)))
    for top in range(1, SEARCH_BOUND + 1):
        for rest in product(range(top + 1), repeat=rank - 1):
            if rest and max(rest) == top:
                yield Stability((0,) + rest)


def find_generic_stability(quiver: Quiver) -> Stability:
    """First candidate stability under which every positive root is its own factor.

    Tries STABILITY_FAMILIES, then integer weights up to SEARCH_BOUND with the
    first vertex at 0. At most SEARCH_LIMIT candidates get the full check.

    Raises:
        NotDynkin: If the quiver is not of Dynkin type
        NonGenericStability: If no candidate works
    """
    roots = positive_roots(quiver)
    order = max(alpha.dim for alpha in roots)
    tried = 0
    for theta in _candidates(quiver.rank):
        if tried >= SEARCH_LIMIT:
            break
        if not _passes_quick_checks(quiver, theta, roots):
            continue
        tried += 1
        try:
            factors = root_factors(HNContext(quiver, theta), roots, order)
        except NonGenericStability:
            continue
        if len(factors) != len(roots):
            continue
        log_with_context(
            logger,
            "debug",
            "Generic stability found",
            quiver=quiver.vertices,
            theta=theta.weights,
            tried=tried,
        )
        return theta
    raise NonGenericStability(
        "all candidates", [quiver.format(alpha) for alpha in roots]
    )


@timing_decorator(logger)
def dynkin_factorization(
    quiver: Quiver,
    theta: Optional[Stability],
    order: int,
    logger: logging.Logger = logger,
) -> Report:
    """Check T_{i_1} o ... o T_{i_r} = T_{alpha_1} o ... o T_{alpha_nu}.

    The right-hand side runs over the positive roots in decreasing slope order.

    Args:
        quiver: Dynkin quiver
        theta: Stability; None searches for a generic one
        order: Truncation order N

    Returns:
        Report with the produced root order in ``details["roots"]``

    Raises:
        NotDynkin: If the quiver is not of Dynkin type
        NonGenericStability: With the offending slope class
    """
    roots = positive_roots(quiver)
    if theta is None:
        theta = find_generic_stability(quiver)
    ctx = HNContext(quiver, theta)
    report = Report(suite="dynkin", subject=run_subject(quiver, theta, order))
    factors = root_factors(ctx, roots, order)

    visible = sorted(alpha for alpha in roots if alpha.dim <= order)
    report.compare(
        "factor roots = positive roots",
        "multiset",
        [quiver.format(alpha) for alpha in visible],
        [quiver.format(alpha) for alpha in sorted(alpha for _, alpha in factors)],
    )
    lhs = vertex_composition(quiver, order)
    autos = [t_d(quiver, alpha, order) for _, alpha in factors]
    rhs = compose_all(autos, quiver, order)
    for vertex, d, a, b in lhs.diff(rhs):
        location = f"x_{vertex} at {quiver.format(d)}"
        report.mismatch("vertex composition = root composition", location, a, b)
    report.checks += 1

    report.details["theta"] = list(theta.weights)
    report.details["roots"] = [quiver.format(alpha) for _, alpha in factors]
    report.details["slopes"] = [str(mu) for mu, _ in factors]
    log_with_context(
        logger,
        "info",
        "Dynkin factorization checked",
        quiver=quiver.vertices,
        order=order,
        factors=len(factors),
        failures=len(report.discrepancies),
    )
    return report
