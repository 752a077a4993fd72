"""Poisson automorphisms x_i -> x_i u_i of B and the specialization map Phi."""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from algebra.comm_series import CommSeries, bracket, substitute, unit_power
from algebra.skew_series import SkewSeries, invert, mul, specialize_q1
from errors import IncompatibleSeries, IntegralityFailure, PoleAtOne, ZeroDimVector
from quivers.quiver import DimVector, Quiver, Slope
from services.hn_recursion import HNContext, series_real_root, slope_series
from services.reports import Report, run_subject
from services.wallcross import (
    SmoothModelTable,
    certify_integral,
    conjugation_series,
    euler_table,
    vertex_conjugations,
    vertex_product_at_one,
)
from utils.logger import get_logger, log_with_context
from utils.timing import timing_decorator

logger = get_logger(__name__)


@dataclass(frozen=True)
class PoissonAuto:
    """Automorphism x_i -> x_i * u_i with one unit multiplier per vertex."""

    quiver: Quiver
    order: int
    multipliers: Tuple[CommSeries, ...]

    def __post_init__(self) -> None:
        if len(self.multipliers) != self.quiver.rank:
            raise IncompatibleSeries(
                f"{len(self.multipliers)} multipliers for {self.quiver.rank} vertices"
            )

    @classmethod
    def identity(cls, quiver: Quiver, order: int) -> "PoissonAuto":
        one = CommSeries.one(quiver, order)
        return cls(quiver, order, tuple(one for _ in range(quiver.rank)))

    def apply(self, f: CommSeries) -> CommSeries:
        return substitute(f, self.multipliers)

    def image_of_variable(self, index: int) -> CommSeries:
        return self.multipliers[index].shift(self.quiver.unit(index))

    def is_identity(self) -> bool:
        one = CommSeries.one(self.quiver, self.order)
        return all(u == one for u in self.multipliers)

    def diff(
        self, other: "PoissonAuto"
    ) -> List[Tuple[str, DimVector, Fraction, Fraction]]:
        """Disagreeing multiplier coefficients as (vertex, d, self_d, other_d)."""
        pairs = zip(self.multipliers, other.multipliers)
        return [
            (vertex, d, a, b)
            for vertex, (mine, theirs) in zip(self.quiver.vertices, pairs)
            for d, a, b in mine.diff(theirs)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PoissonAuto):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.order == other.order
            and self.multipliers == other.multipliers
        )

    def __hash__(self) -> int:
        return hash((self.quiver, self.order, self.multipliers))


def t_d(quiver: Quiver, d: Sequence[int], order: int) -> PoissonAuto:
    """T_d(x_j) = x_j (1 + x^d)^{d, j}.

    Raises:
        ZeroDimVector: If d = 0
    """
    d = DimVector(d)
    if d.is_zero:
        raise ZeroDimVector("T_d needs a non-zero dimension vector")
    base = CommSeries.one(quiver, order) + CommSeries.monomial(quiver, order, d)
    return PoissonAuto(
        quiver,
        order,
        tuple(
            unit_power(base, quiver.skew_form(d, quiver.unit(j)))
            for j in range(quiver.rank)
        ),
    )


def compose(outer: PoissonAuto, inner: PoissonAuto) -> PoissonAuto:
    """outer o inner, applying ``inner`` first.

    (S o T)(x_j) = S(x_j u_j^T) = x_j u_j^S S(u_j^T).

    Raises:
        IncompatibleSeries: On quiver or order mismatch
    """
    if outer.quiver != inner.quiver or outer.order != inner.order:
        raise IncompatibleSeries("automorphisms over different quivers or orders")
    return PoissonAuto(
        outer.quiver,
        outer.order,
        tuple(u * outer.apply(v) for u, v in zip(outer.multipliers, inner.multipliers)),
    )


def compose_all(
    autos: Sequence[PoissonAuto], quiver: Quiver, order: int
) -> PoissonAuto:
    """autos[0] o autos[1] o ... (the last one acts first)."""
    result = PoissonAuto.identity(quiver, order)
    for auto in autos:
        result = compose(result, auto)
    return result


def invert_auto(auto: PoissonAuto) -> PoissonAuto:
    """Two-sided inverse S of T, from the fixed point u_j^S = S(u_j^T)^-1.

    Each round fixes one more degree, so order + 1 rounds suffice.
    """
    inverse = PoissonAuto.identity(auto.quiver, auto.order)
    for _ in range(auto.order + 1):
        updated = PoissonAuto(
            auto.quiver,
            auto.order,
            tuple(inverse.apply(u).invert() for u in auto.multipliers),
        )
        if updated == inverse:
            break
        inverse = updated
    return inverse


def phi(base: SkewSeries) -> PoissonAuto:
    """Phi(P): x_j -> x_j * (Q^{ {_, j} } at q = 1).

    Raises:
        IntegralityFailure: If a conjugation series is not Laurent-integral
        PoleAtOne: If specialization fails
    """
    quiver = base.quiver
    multipliers = []
    for j in range(quiver.rank):
        eta = quiver.skew_functional(quiver.unit(j))
        cs = certify_integral(conjugation_series(base, eta))
        multipliers.append(specialize_q1(cs.value))
    return PoissonAuto(quiver, base.order, tuple(multipliers))


def phi_via_vertex_series(base: SkewSeries) -> PoissonAuto:
    """Phi(P) from the vertex series: x_j -> x_j prod_i (Q^{i.} at q=1)^{i, j}."""
    quiver = base.quiver
    conjugations = vertex_conjugations(base)
    return PoissonAuto(
        quiver,
        base.order,
        tuple(
            vertex_product_at_one(conjugations, quiver.skew_functional(quiver.unit(j)))
            for j in range(quiver.rank)
        ),
    )


def vertex_series_from_table(
    quiver: Quiver, order: int, table: SmoothModelTable
) -> List[CommSeries]:
    """Q_mu^i(x) = 1 + sum_d chi(M_{d,i}) x^d for every vertex i."""
    series: List[Dict[DimVector, Fraction]] = [
        {quiver.zero(): Fraction(1)} for _ in range(quiver.rank)
    ]
    for (d, n), row in table.rows.items():
        i = n.weights.index(1)
        series[i][d] = Fraction(row.euler)
    return [CommSeries(quiver, order, coefficients) for coefficients in series]


def t_mu_from_euler(quiver: Quiver, order: int, table: SmoothModelTable) -> PoissonAuto:
    """T_mu(x_j) = x_j prod_i Q_mu^i(x)^{b_ij} built from Euler characteristics."""
    vertex_series = vertex_series_from_table(quiver, order, table)
    multipliers = []
    for j in range(quiver.rank):
        value = CommSeries.one(quiver, order)
        for i, q_i in enumerate(vertex_series):
            exponent = quiver.b(i, j)
            if exponent:
                value = value * unit_power(q_i, exponent)
        multipliers.append(value)
    return PoissonAuto(quiver, order, tuple(multipliers))


def slope_automorphisms(ctx: HNContext, order: int) -> Dict[Slope, PoissonAuto]:
    """T_mu = Phi(P_mu) for every slope present up to ``order``, decreasing."""
    return {mu: phi(base) for mu, base in slope_series(ctx, order).items()}


def vertex_composition(quiver: Quiver, order: int) -> PoissonAuto:
    """T_{i_1} o ... o T_{i_r} along the admissible order."""
    autos = [t_d(quiver, quiver.unit(k), order) for k in range(quiver.rank)]
    return compose_all(autos, quiver, order)


def check_poisson_property(
    auto: PoissonAuto,
) -> List[Tuple[int, int, DimVector, Fraction, Fraction]]:
    """Pairs (i, j) where T({x_i, x_j}) != {T(x_i), T(x_j)}.

    Each pair carries the first coefficient where the two sides differ.
    """
    quiver, order = auto.quiver, auto.order
    failures = []
    for i, j in combinations(range(quiver.rank), 2):
        x_i = CommSeries.variable(quiver, order, i)
        x_j = CommSeries.variable(quiver, order, j)
        lhs = auto.apply(bracket(x_i, x_j))
        rhs = bracket(auto.image_of_variable(i), auto.image_of_variable(j))
        diff = lhs.diff(rhs)
        if diff:
            failures.append((i, j) + diff[0])
    return failures


def _record_auto_diff(
    report: Report, check: str, expected: PoissonAuto, actual: PoissonAuto
) -> None:
    report.checks += 1
    for vertex, d, a, b in expected.diff(actual):
        report.mismatch(check, f"x_{vertex} at {expected.quiver.format(d)}", a, b)


@timing_decorator(logger)
def verify_main_theorem(
    ctx: HNContext, order: int, logger: logging.Logger = logger
) -> Report:
    """T_{i_1} o ... o T_{i_r} = descending composition of the T_mu, up to ``order``.

    Also checks each T_mu against prod_i Q_mu^i(x)^{b_ij} built from Euler
    characteristics of smooth models.
    """
    quiver = ctx.quiver
    report = Report(
        suite="factorization", subject=run_subject(quiver, ctx.theta, order)
    )
    lhs = vertex_composition(quiver, order)
    try:
        factors = slope_automorphisms(ctx, order)
    except (IntegralityFailure, PoleAtOne) as e:
        report.fail("Phi(P_mu) defined", str(e), "certified series", "failure")
        return report

    nontrivial = [auto for auto in factors.values() if not auto.is_identity()]
    rhs = compose_all(nontrivial, quiver, order)
    _record_auto_diff(report, "vertex composition = descending composition", lhs, rhs)

    tables = euler_table(ctx, order)
    for mu, auto in factors.items():
        _record_auto_diff(
            report,
            f"T_mu = prod Q_mu^i^b_ij (mu={mu})",
            auto,
            t_mu_from_euler(quiver, order, tables[mu]),
        )

    report.details["slopes"] = [
        str(mu) for mu, auto in factors.items() if not auto.is_identity()
    ]
    log_with_context(
        logger,
        "info",
        "Wall-crossing factorization checked",
        quiver=quiver.vertices,
        order=order,
        factors=len(nontrivial),
        failures=len(report.discrepancies),
    )
    return report


@timing_decorator(logger)
def verify_poisson(
    ctx: HNContext,
    order: int,
    seed: int = 0,
    samples: int = 5,
    logger: logging.Logger = logger,
) -> Report:
    """Poisson property, inverses and Phi as a homomorphism.

    The vertex-series form of Phi is compared with the direct one.

    Besides the fixed pairs, ``samples`` pairs are drawn with ``seed`` from the
    real-root series, the slope series and their inverses.
    """
    quiver = ctx.quiver
    report = Report(suite="poisson", subject=run_subject(quiver, ctx.theta, order))
    slope_bases = slope_series(ctx, order)
    autos: Dict[str, PoissonAuto] = {
        f"T_{quiver.vertices[k]}": t_d(quiver, quiver.unit(k), order)
        for k in range(quiver.rank)
    }
    for mu, base in slope_bases.items():
        autos[f"T_mu({mu})"] = phi(base)
        _record_auto_diff(
            report,
            f"Phi via {{_, j}} = Phi via vertex series (mu={mu})",
            autos[f"T_mu({mu})"],
            phi_via_vertex_series(base),
        )

    identity = PoissonAuto.identity(quiver, order)
    for name, auto in autos.items():
        report.checks += 1
        for i, j, d, a, b in check_poisson_property(auto):
            x_i, x_j = quiver.vertices[i], quiver.vertices[j]
            location = f"{name} on (x_{x_i}, x_{x_j}) at {quiver.format(d)}"
            report.mismatch("Poisson property", location, a, b)
        inverse = invert_auto(auto)
        _record_auto_diff(
            report, f"{name} o inverse = id", identity, compose(auto, inverse)
        )
        _record_auto_diff(
            report, f"inverse o {name} = id", identity, compose(inverse, auto)
        )

    real_roots = [
        series_real_root(quiver, quiver.unit(k), order) for k in range(quiver.rank)
    ]
    pairs: List[Tuple[str, SkewSeries, SkewSeries]] = [
        (f"P_{quiver.vertices[a]} P_{quiver.vertices[b]}", real_roots[a], real_roots[b])
        for a in range(quiver.rank)
        for b in range(quiver.rank)
        if a != b
    ]
    pairs += [
        (f"P_{mu} P_{nu}", slope_bases[mu], slope_bases[nu])
        for mu, nu in combinations(slope_bases, 2)
    ]
    pool = [(f"P_{quiver.vertices[k]}", s) for k, s in enumerate(real_roots)]
    pool += [(f"P_{mu}", s) for mu, s in slope_bases.items()]
    pool += [(f"{name}^-1", invert(s)) for name, s in list(pool)]
    rng = random.Random(seed)
    for _ in range(samples if len(pool) > 1 else 0):
        (name_a, first), (name_b, second) = rng.sample(pool, 2)
        pairs.append((f"{name_a} {name_b}", first, second))
    for label, first, second in pairs:
        _record_auto_diff(
            report,
            f"Phi({label}) = Phi o Phi",
            compose(phi(first), phi(second)),
            phi(mul(first, second)),
        )

    log_with_context(
        logger,
        "info",
        "Poisson suite finished",
        quiver=quiver.vertices,
        order=order,
        checks=report.checks,
        failures=len(report.discrepancies),
    )
    return report
