"""Kronecker quivers K_m: F_mu, the exponents c(mu, k) and the table d(a, b).

For Theta = j^* every slope class is N(a, b) with (a, b) coprime, so each
T_mu only involves the single variable y = x_i^a x_j^b and factors as a
product of powers of T_{ka,kb}.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.comm_series import CommSeries, unit_power
from algebra.skew_series import specialize_q1
from errors import ConfigurationError, NonIntegerExponent, PreconditionViolation
from quivers.catalog import kronecker_quiver, kronecker_stability
from quivers.quiver import DimVector, Quiver, Slope, slope_classes
from services.hn_recursion import HNContext, series_Pmu
from services.poisson_service import (
    PoissonAuto,
    compose_all,
    phi,
    t_d,
    vertex_composition,
)
from services.reports import Report
from services.wallcross import vertex_conjugations
from utils.logger import get_logger, log_with_context
from utils.timing import timing_decorator

logger = get_logger(__name__)

Pair = Tuple[int, int]


@dataclass
class DTRow:
    """Exponents for one primitive class (a, b)."""

    slope: Slope
    c: Dict[int, int] = field(default_factory=dict)
    d: Dict[Pair, Fraction] = field(default_factory=dict)


@dataclass
class DTTable:
    m: int
    order: int
    rows: Dict[Pair, DTRow] = field(default_factory=dict)

    def nonzero(self) -> Dict[Pair, Fraction]:
        return {
            pair: value
            for row in self.rows.values()
            for pair, value in row.d.items()
            if value
        }


@lru_cache(maxsize=16)
def kronecker_context(m: int) -> HNContext:
    """Shared HN context for K_m with Theta = j^*."""
    quiver = kronecker_quiver(m)
    return HNContext(quiver, kronecker_stability(quiver))


def primitive_pair(mu: Slope) -> Pair:
    """(a, b) coprime with b / (a + b) = mu."""
    mu = Fraction(mu)
    if not 0 <= mu <= 1:
        raise ConfigurationError(f"Kronecker slopes lie in [0, 1], got {mu}")
    return mu.denominator - mu.numerator, mu.numerator


def bezout(a: int, b: int) -> Pair:
    """Canonical (c, d) with ac + bd = 1.

    For b > 0 the pair has 0 <= c < b; for b = 0 (so a = 1) it is (1, 0).

    Raises:
        PreconditionViolation: If gcd(a, b) != 1
    """
    if a < 0 or b < 0 or gcd(a, b) != 1:
        raise PreconditionViolation(f"({a}, {b}) is not a coprime pair in N^2")
    if b == 0:
        return 1, 0
    c = pow(a, -1, b) if b > 1 else 0
    return c, (1 - a * c) // b


def to_univariate(f: CommSeries, pair: Pair, limit: int) -> List[Fraction]:
    """Coefficients of f as a series in y = x^(a, b), up to y^limit.

    Raises:
        PreconditionViolation: If f has a term off the ray N(a, b)
    """
    a, b = pair
    coefficients = [Fraction(0)] * (limit + 1)
    for d, c in f.items():
        k = d[0] // a if a else d[1] // b
        if DimVector((k * a, k * b)) != d:
            raise PreconditionViolation(f"term at {tuple(d)} is off the ray {pair}")
        if k <= limit:
            coefficients[k] = c
    return coefficients


def from_univariate(
    quiver: Quiver, order: int, coefficients: Sequence[Fraction], pair: Pair
) -> CommSeries:
    a, b = pair
    terms = {DimVector((k * a, k * b)): c for k, c in enumerate(coefficients) if c}
    return CommSeries(quiver, order, terms)


def _truncated_mul(
    left: Sequence[Fraction], right: Sequence[Fraction], limit: int
) -> List[Fraction]:
    product = [Fraction(0)] * (limit + 1)
    for s, x in enumerate(left):
        if not x:
            continue
        for t, y in enumerate(right[: limit + 1 - s]):
            product[s + t] += x * y
    return product


def _binomial_power(k: int, exponent: int, limit: int) -> List[Fraction]:
    """(1 + y^k)^exponent up to y^limit."""
    series = [Fraction(0)] * (limit + 1)
    term = Fraction(1)
    n = 0
    while n * k <= limit:
        series[n * k] = term
        term = term * (exponent - n) / (n + 1)
        n += 1
    return series


def infinite_product_exponents(
    coefficients: Sequence[Fraction], limit: int
) -> Dict[int, int]:
    """Exponents c(k) with F = prod_{k<=limit} (1 + y^k)^c(k) mod y^(limit + 1).

    c(k) is read off the degree-k coefficient once the factors of lower
    degree are divided out.

    Raises:
        PreconditionViolation: If the constant term is not 1
        NonIntegerExponent: If some c(k) is not an integer
    """
    current = [Fraction(c) for c in coefficients[: limit + 1]]
    current += [Fraction(0)] * (limit + 1 - len(current))
    if current[0] != 1:
        raise PreconditionViolation(f"constant term is {current[0]}, expected 1")
    exponents: Dict[int, int] = {}
    for k in range(1, limit + 1):
        value = current[k]
        if value.denominator != 1:
            raise NonIntegerExponent(k, value)
        exponents[k] = int(value)
        if value:
            divisor = _binomial_power(k, -int(value), limit)
            current = _truncated_mul(current, divisor, limit)
    return exponents


def expand_product(exponents: Dict[int, int], limit: int) -> List[Fraction]:
    """prod_k (1 + y^k)^c(k) up to y^limit."""
    result = [Fraction(1)] + [Fraction(0)] * limit
    for k, c in sorted(exponents.items()):
        if c and k <= limit:
            result = _truncated_mul(result, _binomial_power(k, c, limit), limit)
    return result


def vertex_series_at_one(
    m: int, mu: Slope, order: int
) -> Tuple[CommSeries, CommSeries]:
    """(Q_mu^i, Q_mu^j) specialized at q = 1."""
    ctx = kronecker_context(m)
    q_i, q_j = vertex_conjugations(series_Pmu(ctx, Fraction(mu), order), Fraction(mu))
    return specialize_q1(q_i.value), specialize_q1(q_j.value)


def f_mu(
    m: int, mu: Slope, order: int, bezout_pair: Optional[Pair] = None
) -> CommSeries:
    """F_mu = Q_mu^i^c Q_mu^j^d for a Bezout pair ac + bd = 1.

    Raises:
        PreconditionViolation: If ``bezout_pair`` does not satisfy ac + bd = 1
    """
    a, b = primitive_pair(mu)
    c, d = bezout_pair if bezout_pair is not None else bezout(a, b)
    if a * c + b * d != 1:
        raise PreconditionViolation(f"({c}, {d}) is not a Bezout pair for ({a}, {b})")
    q_i, q_j = vertex_series_at_one(m, mu, order)
    return unit_power(q_i, c) * unit_power(q_j, d)


def dt_table(m: int, order: int) -> DTTable:
    """c(mu, k) and d(ka, kb) = c(mu, k) / k for every slope class up to ``order``.

    Raises:
        NonIntegerExponent: If some F_mu has a non-integral (1 + y^k) factorization
    """
    if m < 1:
        raise ConfigurationError(f"Kronecker table needs m >= 1, got {m}")
    ctx = kronecker_context(m)
    table = DTTable(m=m, order=order)
    for mu in slope_classes(ctx.quiver, ctx.theta, order):
        a, b = primitive_pair(mu)
        limit = order // (a + b)
        coefficients = to_univariate(f_mu(m, mu, order), (a, b), limit)
        exponents = infinite_product_exponents(coefficients, limit)
        row = DTRow(slope=mu, c=exponents)
        for k, c in exponents.items():
            value = Fraction(c, k)
            if (value * gcd(k * a, k * b)).denominator != 1:
                raise NonIntegerExponent(k, value)
            row.d[(k * a, k * b)] = value
        table.rows[(a, b)] = row
    return table


def t_d_power(
    quiver: Quiver, d: Sequence[int], exponent: Fraction, order: int
) -> PoissonAuto:
    """T_d^exponent: x_j -> x_j (1 + x^d)^({d, j} * exponent).

    Raises:
        NonIntegerExponent: If some {d, j} * exponent is not an integer
    """
    d = DimVector(d)
    base = CommSeries.one(quiver, order) + CommSeries.monomial(quiver, order, d)
    multipliers = []
    for j in range(quiver.rank):
        power = Fraction(quiver.skew_form(d, quiver.unit(j))) * exponent
        if power.denominator != 1:
            raise NonIntegerExponent(j, power)
        multipliers.append(unit_power(base, int(power)))
    return PoissonAuto(quiver, order, tuple(multipliers))


def kronecker_factors(m: int, order: int) -> List[Tuple[Slope, Pair, Fraction]]:
    """Non-trivial factors T_{ka,kb}^{d(ka,kb)} in decreasing slope order."""
    table = dt_table(m, order)
    factors = []
    for row in sorted(table.rows.values(), key=lambda r: r.slope, reverse=True):
        for pair, value in sorted(row.d.items()):
            if value:
                factors.append((row.slope, pair, value))
    return factors


def reconstruct_t_mu(m: int, mu: Slope, order: int) -> PoissonAuto:
    """T_mu from c(mu, k).

    x_i -> x_i prod (1+y^k)^(-mb c_k) and x_j -> x_j prod (1+y^k)^(ma c_k).
    """
    ctx = kronecker_context(m)
    a, b = primitive_pair(mu)
    row = dt_table(m, order).rows[(a, b)]
    limit = order // (a + b)
    multiplier_i = expand_product({k: -m * b * c for k, c in row.c.items()}, limit)
    multiplier_j = expand_product({k: m * a * c for k, c in row.c.items()}, limit)
    return PoissonAuto(
        ctx.quiver,
        order,
        (
            from_univariate(ctx.quiver, order, multiplier_i, (a, b)),
            from_univariate(ctx.quiver, order, multiplier_j, (a, b)),
        ),
    )


def _name(pair: Pair) -> str:
    return f"T_{{{pair[0]},{pair[1]}}}"


def single_arrow_identity(order: int) -> Dict[str, object]:
    """Recompute T_{1,0} o T_{0,1} for K_1 and test the printed right-hand side."""
    quiver = kronecker_context(1).quiver
    lhs = vertex_composition(quiver, order)
    factors = [pair for _, pair, _ in kronecker_factors(1, order)]
    computed = compose_all([t_d(quiver, d, order) for d in factors], quiver, order)
    printed = [(0, 1), (1, 1), (0, 1)]
    printed_value = compose_all([t_d(quiver, d, order) for d in printed], quiver, order)
    return {
        "computed": " o ".join(_name(pair) for pair in factors),
        "computed_matches": computed == lhs,
        "printed": " o ".join(_name(pair) for pair in printed),
        "printed_matches": printed_value == lhs,
    }


def double_arrow_slope_half(order: int) -> Dict[str, object]:
    """Compare Phi(P_{1/2}) for K_2 with its displayed form.

    The display reads x_i -> x_i (1 - x_i x_j)^4, x_j -> x_j (1 - x_i x_j)^-4.
    """
    quiver = kronecker_context(2).quiver
    computed = phi(series_Pmu(kronecker_context(2), Fraction(1, 2), order))
    base = CommSeries.one(quiver, order) - CommSeries.monomial(quiver, order, (1, 1))
    displayed = PoissonAuto(quiver, order, (unit_power(base, 4), unit_power(base, -4)))
    return {
        "displayed": "x_i(1-x_ix_j)^4, x_j(1-x_ix_j)^-4",
        "matches": computed == displayed,
    }


@timing_decorator(logger)
def verify_kronecker(m: int, order: int, logger: logging.Logger = logger) -> Report:
    """Check every slope class of K_m and then the full product identity.

    Per class: F_mu powers, Bezout independence, the exponent round trip and
    the reconstruction of T_mu from c(mu, k).
    """
    ctx = kronecker_context(m)
    quiver = ctx.quiver
    report = Report(suite="kronecker", subject=f"m={m} N={order}")
    try:
        table = dt_table(m, order)
    except NonIntegerExponent as e:
        report.fail("c(mu, k) integral", f"k={e.k}", "integer", e.value)
        return report

    for (a, b), row in table.rows.items():
        mu = row.slope
        limit = order // (a + b)
        f = f_mu(m, mu, order)
        q_i, q_j = vertex_series_at_one(m, mu, order)
        report.compare("F_mu^a = Q_mu^i", f"({a},{b})", q_i, unit_power(f, a))
        report.compare("F_mu^b = Q_mu^j", f"({a},{b})", q_j, unit_power(f, b))
        c, d = bezout(a, b)
        report.compare(
            "F_mu independent of Bezout pair",
            f"({a},{b})",
            f,
            f_mu(m, mu, order, (c + b, d - a)),
        )
        report.compare(
            "prod (1+y^k)^c(k) = F_mu",
            f"({a},{b})",
            to_univariate(f, (a, b), limit),
            expand_product(row.c, limit),
        )
        report.compare(
            "T_mu from c(mu,k) = Phi(P_mu)",
            f"({a},{b})",
            phi(series_Pmu(ctx, mu, order)),
            reconstruct_t_mu(m, mu, order),
        )

    lhs = vertex_composition(quiver, order)
    powers = [
        t_d_power(quiver, pair, value, order)
        for _, pair, value in kronecker_factors(m, order)
    ]
    rhs = compose_all(powers, quiver, order)
    report.compare("T_i o T_j = prod T_{a,b}^d(a,b)", f"m={m}", lhs, rhs)
    report.details["d"] = {
        f"{a},{b}": str(value) for (a, b), value in table.nonzero().items()
    }
    if m == 1:
        report.details["single_arrow_identity"] = single_arrow_identity(order)
    if m == 2 and order >= 2:
        report.details["slope_half"] = double_arrow_slope_half(order)

    log_with_context(
        logger,
        "info",
        "Kronecker suite finished",
        m=m,
        order=order,
        classes=len(table.rows),
        failures=len(report.discrepancies),
    )
    return report
