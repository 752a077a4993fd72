"""Truncated skew power series A = Q(q)_q[[Lambda^+]].

Multiplication is t^d * t^e = q^(-<e,d>) t^(d+e); every series is truncated
at total dimension ``order``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from algebra.comm_series import CommSeries
from algebra.rational_functions import QRational, evaluate
from errors import (
    IncompatibleSeries,
    MixedSlopeFactor,
    NonUnitConstantTerm,
    PoleAt,
    PoleAtOne,
    UnnormalizedFactor,
)
from quivers.quiver import DimVector, Functional, Quiver, Slope, slope

_ZERO = QRational.zero()
_ONE = QRational.one()


@lru_cache(maxsize=4096)
def q_power(exponent: int) -> QRational:
    return QRational.q_power(exponent)


@dataclass(frozen=True, eq=False)
class SkewSeries:
    """Element of A truncated at dim d <= order; absent keys are zero."""

    quiver: Quiver
    order: int
    coefficients: Mapping[DimVector, QRational] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {
            DimVector(d): c
            for d, c in self.coefficients.items()
            if not c.is_zero and sum(d) <= self.order
        }
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def one(cls, quiver: Quiver, order: int) -> "SkewSeries":
        return cls(quiver, order, {quiver.zero(): _ONE})

    @classmethod
    def monomial(
        cls, quiver: Quiver, order: int, d: Sequence[int], coefficient: QRational = _ONE
    ) -> "SkewSeries":
        return cls(quiver, order, {DimVector(d): coefficient})

    def coefficient(self, d: Sequence[int]) -> QRational:
        return self.coefficients.get(DimVector(d), _ZERO)

    @property
    def constant_term(self) -> QRational:
        return self.coefficient(self.quiver.zero())

    def items(self) -> Iterator[Tuple[DimVector, QRational]]:
        return iter(
            sorted(self.coefficients.items(), key=lambda kv: (kv[0].dim, kv[0]))
        )

    def support(self) -> List[DimVector]:
        return [d for d, _ in self.items()]

    def is_one(self) -> bool:
        only_constant = list(self.coefficients) == [self.quiver.zero()]
        return only_constant and self.constant_term.is_one

    def _check(self, other: "SkewSeries") -> None:
        if self.quiver != other.quiver or self.order != other.order:
            raise IncompatibleSeries(
                f"series over ({self.quiver.vertices}, N={self.order}) and "
                f"({other.quiver.vertices}, N={other.order})"
            )

    def __add__(self, other: "SkewSeries") -> "SkewSeries":
        self._check(other)
        total = dict(self.coefficients)
        for d, c in other.coefficients.items():
            total[d] = total.get(d, _ZERO) + c
        return SkewSeries(self.quiver, self.order, total)

    def __neg__(self) -> "SkewSeries":
        negated = {d: -c for d, c in self.coefficients.items()}
        return SkewSeries(self.quiver, self.order, negated)

    def __sub__(self, other: "SkewSeries") -> "SkewSeries":
        return self + (-other)

    def __mul__(self, other: "SkewSeries") -> "SkewSeries":
        return mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewSeries):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.order == other.order
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.quiver, self.order, frozenset(self.coefficients.items())))

    def diff(self, other: "SkewSeries") -> List[Tuple[DimVector, QRational, QRational]]:
        """Coefficients where the two series disagree, as (d, self_d, other_d)."""
        self._check(other)
        keys = sorted(
            set(self.coefficients) | set(other.coefficients), key=lambda d: (d.dim, d)
        )
        return [
            (d, self.coefficient(d), other.coefficient(d))
            for d in keys
            if self.coefficient(d) != other.coefficient(d)
        ]


def mul(a: SkewSeries, b: SkewSeries) -> SkewSeries:
    """Twisted product, coefficient at f = sum_{d+e=f} q^(-<e,d>) a_d b_e.

    Raises:
        IncompatibleSeries: On quiver or order mismatch
    """
    a._check(b)
    quiver, order = a.quiver, a.order
    product: Dict[DimVector, QRational] = {}
    right = list(b.coefficients.items())
    for d, x in a.coefficients.items():
        room = order - d.dim
        for e, y in right:
            if e.dim > room:
                continue
            key = d + e
            term = q_power(-quiver.euler_form(e, d)) * x * y
            product[key] = product.get(key, _ZERO) + term
    return SkewSeries(quiver, order, product)


def invert(a: SkewSeries) -> SkewSeries:
    """Inverse of a series with constant term 1, solved degree by degree.

    Raises:
        NonUnitConstantTerm: If the constant term is not 1
    """
    if not a.constant_term.is_one:
        raise NonUnitConstantTerm(f"constant term is {a.constant_term}")
    quiver = a.quiver
    zero = quiver.zero()
    tail = [(d, c) for d, c in a.coefficients.items() if d != zero]
    inverse: Dict[DimVector, QRational] = {zero: _ONE}
    for f in quiver.dimension_vectors(a.order):
        value = _ZERO
        for d, c in tail:
            if not d.fits_in(f):
                continue
            rest = inverse.get(f - d)
            if rest is None:
                continue
            value = value - q_power(-quiver.euler_form(f - d, d)) * c * rest
        if not value.is_zero:
            inverse[f] = value
    return SkewSeries(quiver, a.order, inverse)


def twist(a: SkewSeries, eta: Functional) -> SkewSeries:
    """P(q^eta t) = sum q^eta(d) a_d t^d."""
    return SkewSeries(
        a.quiver, a.order, {d: q_power(eta(d)) * c for d, c in a.coefficients.items()}
    )


def restrict_slope(a: SkewSeries, theta: Functional, mu: Slope) -> SkewSeries:
    """Keep the constant term and the coefficients at d with slope mu."""
    return SkewSeries(
        a.quiver,
        a.order,
        {d: c for d, c in a.coefficients.items() if d.is_zero or slope(theta, d) == mu},
    )


def descending_product(
    factors: Mapping[Slope, SkewSeries], theta: Functional, quiver: Quiver, order: int
) -> SkewSeries:
    """Ordered product over strictly decreasing slopes.

    Each factor must have constant term 1 and be supported on its own slope
    class; the left-to-right product then expands to the finite sum over
    mu_1 > ... > mu_s of c_mu1 * ... * c_mus. No factors give 1.

    Raises:
        UnnormalizedFactor: If a factor's constant term is not 1
        MixedSlopeFactor: If a factor has a term outside its slope class
        IncompatibleSeries: If a factor is over another quiver or order
    """
    result = SkewSeries.one(quiver, order)
    for mu in sorted(factors, reverse=True):
        factor = factors[mu]
        result._check(factor)
        if not factor.constant_term.is_one:
            raise UnnormalizedFactor(mu)
        for d in factor.coefficients:
            if not d.is_zero and slope(theta, d) != mu:
                raise MixedSlopeFactor(mu, d)
        result = mul(result, factor)
    return result


def specialize_q1(a: SkewSeries) -> CommSeries:
    """Evaluate every coefficient at q = 1.

    Raises:
        PoleAtOne: Naming the first dimension vector whose coefficient has a pole at 1
    """
    values: Dict[DimVector, Fraction] = {}
    for d, c in a.items():
        try:
            values[d] = evaluate(c, 1)
        except PoleAt:
            raise PoleAtOne(d) from None
    return CommSeries(a.quiver, a.order, values)
