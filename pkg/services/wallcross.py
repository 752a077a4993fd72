"""Conjugation series Q^eta(t) = P(q^eta t) P(t)^-1 and their certification.

A series P with constant term 1 lies in the subgroup S when every Q^eta has
coefficients in Z[q, q^-1]. For slope series P_mu and framings eta = n. the
certified coefficients are Poincare polynomials of smooth models, so they
must also have nonnegative coefficients.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from algebra.comm_series import CommSeries, unit_power
from algebra.qbinomial import qbinom
from algebra.rational_functions import QLaurent, QRational, as_laurent
from algebra.skew_series import SkewSeries, invert, mul, specialize_q1, twist
from errors import (
    IntegralityFailure,
    NotCoprime,
    NotLaurentIntegral,
    PreconditionViolation,
)
from quivers.quiver import DimVector, Functional, Quiver, Slope, is_coprime
from quivers.roots import real_roots
from services.hn_recursion import (
    HNContext,
    p_d_recursive,
    series_Pmu,
    series_real_root,
    slope_series,
)
from services.reports import Report, run_subject
from utils.logger import get_logger, log_with_context
from utils.timing import timing_decorator

logger = get_logger(__name__)

LAURENT = "Laurent polynomial"


@dataclass
class ConjugationSeries:
    """Q^eta for a base series; ``certified`` is filled by certify_integral."""

    base: SkewSeries
    eta: Functional
    value: SkewSeries
    slope: Optional[Slope] = None
    certified: Dict[DimVector, QLaurent] = field(default_factory=dict)

    @property
    def expects_positive(self) -> bool:
        return self.slope is not None and self.eta.is_framing()


class SmoothModelRow(NamedTuple):
    poincare: QLaurent
    euler: int


@dataclass
class SmoothModelTable:
    """Poincare polynomials and Euler characteristics of M_{d,n} for one slope."""

    slope: Slope
    rows: Dict[Tuple[DimVector, Functional], SmoothModelRow] = field(
        default_factory=dict
    )


def conjugation_series(
    base: SkewSeries, eta: Functional, slope: Optional[Slope] = None
) -> ConjugationSeries:
    """Compute Q^eta(t) = P(q^eta t) P(t)^-1.

    Args:
        base: Series P with constant term 1
        eta: Integer functional
        slope: Slope of the class when ``base`` is P_mu, enabling the positivity check

    Returns:
        Uncertified ConjugationSeries

    Raises:
        NonUnitConstantTerm: If the constant term of ``base`` is not 1
    """
    value = mul(twist(base, eta), invert(base))
    return ConjugationSeries(base=base, eta=eta, value=value, slope=slope)


def certify_integral(cs: ConjugationSeries) -> ConjugationSeries:
    """Certify every coefficient of cs.value as a Laurent polynomial.

    Raises:
        IntegralityFailure: Naming the first offending dimension vector
    """
    quiver = cs.value.quiver
    certified: Dict[DimVector, QLaurent] = {}
    for d, coefficient in cs.value.items():
        location = quiver.format(d)
        try:
            laurent = as_laurent(coefficient)
        except NotLaurentIntegral:
            raise IntegralityFailure(
                location, coefficient, "not in Z[q, q^-1]"
            ) from None
        if cs.expects_positive and not laurent.is_nonnegative():
            raise IntegralityFailure(location, coefficient, "negative coefficient")
        certified[d] = laurent
    cs.certified = certified
    return cs


def vertex_conjugations(
    base: SkewSeries, slope: Optional[Slope] = None
) -> List[ConjugationSeries]:
    """Certified Q^{i.} for every vertex i."""
    quiver = base.quiver
    units = [Functional.unit(quiver.rank, k) for k in range(quiver.rank)]
    return [certify_integral(conjugation_series(base, eta, slope)) for eta in units]


def certify_inverse(base: SkewSeries) -> List[ConjugationSeries]:
    """Certify that P^-1 lies in S along with P."""
    return vertex_conjugations(invert(base))


def certify_product(first: SkewSeries, second: SkewSeries) -> List[ConjugationSeries]:
    """Certify that P_1 P_2 lies in S."""
    return vertex_conjugations(mul(first, second))


def smooth_model_table(
    ctx: HNContext, mu: Slope, framings: Sequence[Functional], order: int
) -> SmoothModelTable:
    """Tabulate poincare(d, n) = coefficient of Q_mu^{n.} at t^d and its value at q=1.

    Raises:
        PreconditionViolation: If a framing has a negative weight
        IntegralityFailure: If certification fails
    """
    base = series_Pmu(ctx, mu, order)
    table = SmoothModelTable(slope=mu)
    class_vectors = [d for d in ctx.quiver.dimension_vectors(order) if ctx.mu(d) == mu]
    for n in framings:
        if not n.is_framing():
            raise PreconditionViolation(f"framing {n.weights} is not in Lambda^+")
        cs = certify_integral(conjugation_series(base, n, mu))
        for d in class_vectors:
            poincare = cs.certified.get(d, QLaurent(()))
            table.rows[(d, n)] = SmoothModelRow(poincare, int(poincare.evaluate(1)))
    return table


def poincare_stable(ctx: HNContext, d: DimVector) -> QLaurent:
    """(q - 1) p_d(q), the Poincare polynomial of the stable moduli space.

    Raises:
        NotCoprime: With a witness e of the same slope
        IntegralityFailure: If the result is not a nonnegative Laurent polynomial
    """
    d = DimVector(d)
    quiver = ctx.quiver
    ok, witness = is_coprime(ctx.theta, d)
    if not ok:
        raise NotCoprime(quiver.format(d), quiver.format(witness))
    value = (QRational.q_power(1) - QRational.one()) * p_d_recursive(ctx, d)
    try:
        laurent = as_laurent(value)
    except NotLaurentIntegral:
        raise IntegralityFailure(
            quiver.format(d), value, "(q-1) p_d not in Z[q, q^-1]"
        ) from None
    if not laurent.is_nonnegative():
        raise IntegralityFailure(quiver.format(d), value, "negative coefficient")
    return laurent


def check_slope_invariance(
    ctx: HNContext, mu: Slope, eta: Functional, nu: Functional, order: int
) -> bool:
    """True iff Q_mu^eta = Q_mu^nu up to ``order``.

    Raises:
        PreconditionViolation: If eta and nu differ on the slope class
    """
    for d in ctx.quiver.dimension_vectors(order):
        if ctx.mu(d) == mu and eta(d) != nu(d):
            raise PreconditionViolation(
                "eta - nu is not a multiple of Theta - mu dim on the class "
                f"(differs at {ctx.quiver.format(d)})"
            )
    base = series_Pmu(ctx, mu, order)
    return conjugation_series(base, eta).value == conjugation_series(base, nu).value


def real_root_closed_form(
    quiver: Quiver, d: DimVector, eta: Functional, order: int
) -> SkewSeries:
    """sum_n [eta(d) choose n]_q t^{nd}."""
    top = eta(d)
    coefficients = {quiver.zero(): QRational.one()}
    n = 1
    while n * d.dim <= order:
        coefficients[d * n] = qbinom(top, n).to_rational()
        n += 1
    return SkewSeries(quiver, order, coefficients)


def vertex_product_at_one(
    conjugations: Sequence[ConjugationSeries], eta: Functional
) -> CommSeries:
    """prod_i (Q^{i.} at q=1)^{eta(i)}."""
    first = specialize_q1(conjugations[0].value)
    result = CommSeries.one(first.quiver, first.order)
    for k, cs in enumerate(conjugations):
        exponent = eta.weights[k]
        if exponent:
            result = result * unit_power(specialize_q1(cs.value), exponent)
    return result


@timing_decorator(logger)
def verify_integrality(
    ctx: HNContext, order: int, logger: logging.Logger = logger
) -> Report:
    """Run the membership checks for S on the slope series of ``ctx``.

    Covers unit framings of every P_mu, inverses, products of slope pairs,
    the q-binomial closed form on every real root and the factorization of
    Q^eta at q=1 into vertex factors.
    """
    quiver = ctx.quiver
    report = Report(
        suite="integrality", subject=run_subject(quiver, ctx.theta, order)
    )
    factors = slope_series(ctx, order)

    certified: Dict[Slope, List[ConjugationSeries]] = {}
    for mu, base in factors.items():
        try:
            certified[mu] = vertex_conjugations(base, mu)
            report.checks += 1
        except IntegralityFailure as e:
            location = f"mu={mu} d={e.dim_vector}"
            report.fail("Q_mu^{i.} integral", location, LAURENT, e.coefficient)
            continue
        try:
            certify_inverse(base)
            report.checks += 1
        except IntegralityFailure as e:
            location = f"mu={mu} d={e.dim_vector}"
            report.fail("inverse in S", location, LAURENT, e.coefficient)

    for (mu, first), (nu, second) in combinations(factors.items(), 2):
        try:
            certify_product(first, second)
            report.checks += 1
        except IntegralityFailure as e:
            location = f"mu={mu},{nu} d={e.dim_vector}"
            report.fail("product in S", location, LAURENT, e.coefficient)

    roots = real_roots(quiver, order)
    for d in roots:
        base = series_real_root(quiver, d, order)
        for k, sign in product(d.support(), (1, -1)):
            eta = Functional.unit(quiver.rank, k).scale(sign)
            closed_form = real_root_closed_form(quiver, d, eta, order)
            conjugated = conjugation_series(base, eta).value
            for e, expected, actual in closed_form.diff(conjugated):
                report.mismatch(
                    "Q_d^eta = q-binomial series",
                    f"d={quiver.format(d)} eta={eta.weights} at {quiver.format(e)}",
                    expected,
                    actual,
                )
            report.checks += 1
    report.details["real_roots"] = [quiver.format(d) for d in roots]

    eta = Functional(tuple(k + 1 for k in range(quiver.rank)))
    for mu, conjugations in certified.items():
        direct = specialize_q1(conjugation_series(factors[mu], eta).value)
        factored = vertex_product_at_one(conjugations, eta)
        for d, expected, actual in direct.diff(factored):
            report.mismatch(
                "Q^eta at q=1 = prod Q^{i.}^eta(i)",
                f"mu={mu} d={quiver.format(d)}",
                expected,
                actual,
            )
        report.checks += 1

    log_with_context(
        logger,
        "info",
        "Integrality suite finished",
        quiver=quiver.vertices,
        order=order,
        checks=report.checks,
        failures=len(report.discrepancies),
    )
    return report


def euler_table(ctx: HNContext, order: int) -> Dict[Slope, SmoothModelTable]:
    """Smooth-model tables for every slope with unit framings at every vertex."""
    framings = [Functional.unit(ctx.quiver.rank, k) for k in range(ctx.quiver.rank)]
    return {
        mu: smooth_model_table(ctx, mu, framings, order)
        for mu in slope_series(ctx, order)
    }
