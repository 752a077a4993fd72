"""Harder-Narasimhan recursion: e_d, p_d and their generating series."""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Optional, Tuple

from algebra.rational_functions import QRational
from algebra.skew_series import SkewSeries, descending_product, mul, q_power
from errors import NotRealRoot, ZeroDimVector
from quivers.quiver import DimVector, Quiver, Slope, Stability, slope, slope_classes
from services.reports import Report, run_subject
from utils.logger import get_logger, log_with_context

logger = get_logger(__name__)

_ONE = QRational.one()
_ZERO = QRational.zero()


@lru_cache(maxsize=None)
def inverse_q_factorial(n: int) -> QRational:
    """prod_{j=1..n} (1 - q^-j)^-1 = prod q^j / (q^j - 1)."""
    value = _ONE
    for j in range(1, n + 1):
        value = value * q_power(j) / (q_power(j) - _ONE)
    return value


def _vertex_factor(d: DimVector) -> QRational:
    value = _ONE
    for a in d:
        value = value * inverse_q_factorial(a)
    return value


@dataclass
class HNContext:
    """Quiver, stability and the write-once cache of p_d values."""

    quiver: Quiver
    theta: Stability
    _e_memo: Dict[DimVector, QRational] = field(default_factory=dict, repr=False)
    _p_memo: Dict[DimVector, QRational] = field(default_factory=dict, repr=False)
    _tail_memo: Dict[Tuple[DimVector, Optional[Slope]], QRational] = field(
        default_factory=dict, repr=False
    )

    def mu(self, d: DimVector) -> Slope:
        return slope(self.theta, d)

    def remember_p(self, d: DimVector, value: QRational) -> QRational:
        # setdefault keeps the first stored value if two callers race
        return self._p_memo.setdefault(d, value)

    def memoized_p(self) -> Dict[DimVector, QRational]:
        return dict(self._p_memo)


def e_d(ctx: HNContext, d: DimVector) -> QRational:
    """e_d(q) = q^-<d,d> prod_i prod_{j<=d_i} (1 - q^-j)^-1."""
    d = DimVector(d)
    cached = ctx._e_memo.get(d)
    if cached is not None:
        return cached
    value = q_power(-ctx.quiver.euler_form(d, d)) * _vertex_factor(d)
    return ctx._e_memo.setdefault(d, value)


def p_d_recursive(ctx: HNContext, d: DimVector) -> QRational:
    """p_d from the defining recursion over HN types.

    p_d = e_d if Theta is constant on supp(d); otherwise
    p_d = e_d - sum over d = d^1 + ... + d^s (s >= 2, mu(d^1) > ... > mu(d^s))
    of q^(-sum_{k<l} <d^l, d^k>) p_{d^1} ... p_{d^s}.

    Raises:
        ZeroDimVector: If d = 0
    """
    d = DimVector(d)
    if d.is_zero:
        raise ZeroDimVector("p_d is defined for non-zero d")
    cached = ctx._p_memo.get(d)
    if cached is not None:
        return cached
    value = e_d(ctx, d)
    if not ctx.theta.is_constant_on(d.support()):
        quiver = ctx.quiver
        for x in quiver.sub_vectors(d):
            if x.is_zero or x == d:
                continue
            rest = d - x
            tail = _ordered_tail(ctx, rest, ctx.mu(x))
            if tail.is_zero:
                continue
            twist = q_power(-quiver.euler_form(rest, x))
            value = value - twist * p_d_recursive(ctx, x) * tail
    return ctx.remember_p(d, value)


def _ordered_tail(ctx: HNContext, r: DimVector, bound: Slope) -> QRational:
    """Sum over decompositions of r with bound > mu(x^1) > mu(x^2) > ...

    Each decomposition contributes q^(-sum_{k<l} <x^l, x^k>) prod p_{x^k}.
    """
    key = (r, bound)
    cached = ctx._tail_memo.get(key)
    if cached is not None:
        return cached
    quiver = ctx.quiver
    total = _ZERO
    for x in quiver.sub_vectors(r):
        if x.is_zero:
            continue
        mu_x = ctx.mu(x)
        if mu_x >= bound:
            continue
        if x == r:
            total = total + p_d_recursive(ctx, x)
            continue
        rest = r - x
        tail = _ordered_tail(ctx, rest, mu_x)
        if not tail.is_zero:
            twist = q_power(-quiver.euler_form(rest, x))
            total = total + twist * p_d_recursive(ctx, x) * tail
    return ctx._tail_memo.setdefault(key, total)


def p_d_resolved(ctx: HNContext, d: DimVector) -> QRational:
    """p_d from the resolved alternating sum.

    Sums (-1)^(s-1) q^(-sum_{k<=l} <d^l, d^k>) prod_k prod_i prod_j (1 - q^-j)^-1
    over tuples (d^1, ..., d^s) of non-zero vectors adding up to d with
    mu(d^1 + ... + d^k) > mu(d) for all k < s.

    Raises:
        ZeroDimVector: If d = 0
    """
    d = DimVector(d)
    if d.is_zero:
        raise ZeroDimVector("p_d is defined for non-zero d")
    quiver = ctx.quiver
    mu_d = ctx.mu(d)
    memo: Dict[DimVector, QRational] = {}

    def part(x: DimVector) -> QRational:
        return q_power(-quiver.euler_form(x, x)) * _vertex_factor(x)

    def suffix_sum(r: DimVector) -> QRational:
        # tuples of r whose running totals, offset by d - r, stay above mu(d)
        if r in memo:
            return memo[r]
        prefix = d - r
        total = part(r)
        for x in quiver.sub_vectors(r):
            if x.is_zero or x == r:
                continue
            if slope(ctx.theta, prefix + x) <= mu_d:
                continue
            rest = r - x
            twist = q_power(-quiver.euler_form(rest, x))
            total = total - twist * part(x) * suffix_sum(rest)
        memo[r] = total
        return total

    return suffix_sum(d)


def series_P(ctx: HNContext, order: int) -> SkewSeries:
    """P(t) = sum_d e_d(q) t^d truncated at ``order``."""
    coefficients = {ctx.quiver.zero(): _ONE}
    for d in ctx.quiver.dimension_vectors(order):
        coefficients[d] = e_d(ctx, d)
    return SkewSeries(ctx.quiver, order, coefficients)


def series_Pmu(ctx: HNContext, mu: Slope, order: int) -> SkewSeries:
    """P_mu(t) = 1 + sum over d of slope mu of p_d(q) t^d."""
    coefficients = {ctx.quiver.zero(): _ONE}
    for d in ctx.quiver.dimension_vectors(order):
        if ctx.mu(d) == mu:
            coefficients[d] = p_d_recursive(ctx, d)
    return SkewSeries(ctx.quiver, order, coefficients)


def slope_series(ctx: HNContext, order: int) -> Dict[Slope, SkewSeries]:
    """All P_mu for the slopes present up to ``order``, in decreasing slope order."""
    return {
        mu: series_Pmu(ctx, mu, order)
        for mu in slope_classes(ctx.quiver, ctx.theta, order)
    }


def series_real_root(quiver: Quiver, d: DimVector, order: int) -> SkewSeries:
    """P_d(t) = sum_n q^(-n^2) / ((1 - q^-1)...(1 - q^-n)) t^(nd).

    Raises:
        NotRealRoot: If <d, d> != 1
    """
    d = DimVector(d)
    value = quiver.euler_form(d, d)
    if value != 1:
        raise NotRealRoot(quiver.format(d), value)
    coefficients = {quiver.zero(): _ONE}
    n = 1
    while n * d.dim <= order:
        coefficients[d * n] = q_power(-n * n) * inverse_q_factorial(n)
        n += 1
    return SkewSeries(quiver, order, coefficients)


def verify_hnsa(
    ctx: HNContext, order: int, logger: logging.Logger = logger
) -> Report:
    """Check P_{i_1} ... P_{i_r} = P(t) = descending product of the P_mu.

    Both sides are compared up to ``order``.
    """
    quiver = ctx.quiver
    report = Report(suite="hn", subject=run_subject(quiver, ctx.theta, order))
    target = series_P(ctx, order)

    vertex_product = SkewSeries.one(quiver, order)
    for k in range(quiver.rank):
        simple = series_real_root(quiver, quiver.unit(k), order)
        vertex_product = mul(vertex_product, simple)
    for d, expected, actual in target.diff(vertex_product):
        report.mismatch("vertex product = P", quiver.format(d), expected, actual)
    report.checks += 1

    factors = slope_series(ctx, order)
    slope_product = descending_product(factors, ctx.theta, quiver, order)
    for d, expected, actual in target.diff(slope_product):
        report.mismatch(
            "descending product of P_mu = P", quiver.format(d), expected, actual
        )
    report.checks += 1

    log_with_context(
        logger,
        "info",
        "HN factorization checked",
        quiver=quiver.vertices,
        order=order,
        slopes=len(factors),
        failures=len(report.discrepancies),
    )
    return report


def verify_recursion_agreement(
    ctx: HNContext, order: int, logger: logging.Logger = logger
) -> Report:
    """Compare p_d_recursive with p_d_resolved for every d with dim d <= order."""
    quiver = ctx.quiver
    report = Report(suite="hn", subject=run_subject(quiver, ctx.theta, order))
    for d in quiver.dimension_vectors(order):
        report.compare(
            "p_d recursive = resolved",
            quiver.format(d),
            p_d_recursive(ctx, d),
            p_d_resolved(ctx, d),
        )
    log_with_context(
        logger,
        "info",
        "HN recursion cross-checked",
        quiver=quiver.vertices,
        order=order,
        checks=report.checks,
        failures=len(report.discrepancies),
    )
    return report
