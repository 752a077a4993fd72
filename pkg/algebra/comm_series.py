"""Truncated commutative power series B = Q[[x_i]] with its Poisson bracket."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from errors import IncompatibleSeries, NonUnitConstantTerm
from quivers.quiver import DimVector, Quiver

Number = int | Fraction


@dataclass(frozen=True, eq=False)
class CommSeries:
    """Series sum c_d x^d over dim d <= order with exact rational coefficients."""

    quiver: Quiver
    order: int
    coefficients: Mapping[DimVector, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {
            DimVector(d): Fraction(c)
            for d, c in self.coefficients.items()
            if c and sum(d) <= self.order
        }
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def zero(cls, quiver: Quiver, order: int) -> "CommSeries":
        return cls(quiver, order, {})

    @classmethod
    def one(cls, quiver: Quiver, order: int) -> "CommSeries":
        return cls(quiver, order, {quiver.zero(): Fraction(1)})

    @classmethod
    def monomial(
        cls, quiver: Quiver, order: int, d: Sequence[int], coefficient: Number = 1
    ) -> "CommSeries":
        return cls(quiver, order, {DimVector(d): Fraction(coefficient)})

    @classmethod
    def variable(cls, quiver: Quiver, order: int, index: int) -> "CommSeries":
        return cls.monomial(quiver, order, quiver.unit(index))

    def coefficient(self, d: Sequence[int]) -> Fraction:
        return self.coefficients.get(DimVector(d), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(self.quiver.zero())

    def items(self) -> Iterator[Tuple[DimVector, Fraction]]:
        return iter(
            sorted(self.coefficients.items(), key=lambda kv: (kv[0].dim, kv[0]))
        )

    def _check(self, other: "CommSeries") -> None:
        if self.quiver != other.quiver or self.order != other.order:
            raise IncompatibleSeries(
                f"series over ({self.quiver.vertices}, N={self.order}) and "
                f"({other.quiver.vertices}, N={other.order})"
            )

    def __add__(self, other: "CommSeries") -> "CommSeries":
        self._check(other)
        total = dict(self.coefficients)
        for d, c in other.coefficients.items():
            total[d] = total.get(d, Fraction(0)) + c
        return CommSeries(self.quiver, self.order, total)

    def __neg__(self) -> "CommSeries":
        negated = {d: -c for d, c in self.coefficients.items()}
        return CommSeries(self.quiver, self.order, negated)

    def __sub__(self, other: "CommSeries") -> "CommSeries":
        return self + (-other)

    def scale(self, factor: Number) -> "CommSeries":
        scaled = {d: factor * c for d, c in self.coefficients.items()}
        return CommSeries(self.quiver, self.order, scaled)

    def __mul__(self, other: "CommSeries") -> "CommSeries":
        self._check(other)
        return self.truncated_product(other, self.order)

    def truncated_product(self, other: "CommSeries", limit: int) -> "CommSeries":
        """Product keeping only terms with dim <= limit."""
        product: Dict[DimVector, Fraction] = {}
        right = list(other.coefficients.items())
        for d, a in self.coefficients.items():
            room = limit - d.dim
            if room < 0:
                continue
            for e, b in right:
                if e.dim <= room:
                    key = d + e
                    product[key] = product.get(key, Fraction(0)) + a * b
        return CommSeries(self.quiver, self.order, product)

    def shift(self, d: Sequence[int]) -> "CommSeries":
        """Multiply by the monomial x^d."""
        d = DimVector(d)
        shifted = {d + e: c for e, c in self.coefficients.items()}
        return CommSeries(self.quiver, self.order, shifted)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommSeries):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.order == other.order
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.quiver, self.order, frozenset(self.coefficients.items())))

    def is_unit(self) -> bool:
        return self.constant_term == 1

    def invert(self) -> "CommSeries":
        """Inverse of a series with constant term 1, solved degree by degree."""
        if not self.is_unit():
            raise NonUnitConstantTerm(f"constant term is {self.constant_term}")
        zero = self.quiver.zero()
        tail = [(d, c) for d, c in self.coefficients.items() if d != zero]
        inverse: Dict[DimVector, Fraction] = {zero: Fraction(1)}
        for f in self.quiver.dimension_vectors(self.order):
            value = Fraction(0)
            for d, c in tail:
                if d.fits_in(f):
                    rest = inverse.get(f - d)
                    if rest:
                        value -= c * rest
            if value:
                inverse[f] = value
        return CommSeries(self.quiver, self.order, inverse)

    def diff(self, other: "CommSeries") -> List[Tuple[DimVector, Fraction, Fraction]]:
        """Coefficients where the two series disagree, as (d, self_d, other_d)."""
        keys = sorted(
            set(self.coefficients) | set(other.coefficients), key=lambda d: (d.dim, d)
        )
        return [
            (d, self.coefficient(d), other.coefficient(d))
            for d in keys
            if self.coefficient(d) != other.coefficient(d)
        ]


def unit_power(u: CommSeries, k: int) -> CommSeries:
    """u^k for a unit u and any integer k (negative k via inversion).

    Raises:
        NonUnitConstantTerm: If u does not have constant term 1
    """
    if not u.is_unit():
        raise NonUnitConstantTerm(f"constant term is {u.constant_term}")
    base = u if k >= 0 else u.invert()
    exponent = abs(k)
    result = CommSeries.one(u.quiver, u.order)
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def bracket(f: CommSeries, g: CommSeries) -> CommSeries:
    """Poisson bracket extending {x^d, x^e} = {d, e} x^(d+e) bilinearly."""
    f._check(g)
    quiver = f.quiver
    result: Dict[DimVector, Fraction] = {}
    for d, a in f.coefficients.items():
        for e, b in g.coefficients.items():
            if d.dim + e.dim > f.order:
                continue
            weight = quiver.skew_form(d, e)
            if weight:
                key = d + e
                result[key] = result.get(key, Fraction(0)) + weight * a * b
    return CommSeries(quiver, f.order, result)


def substitute(
    f: CommSeries, multipliers: Sequence[CommSeries], limit: Optional[int] = None
) -> CommSeries:
    """Apply x_i -> x_i * u_i to f, truncating at ``limit`` (default: f.order)."""
    quiver, order = f.quiver, f.order
    limit = order if limit is None else limit
    powers: Dict[DimVector, CommSeries] = {quiver.zero(): CommSeries.one(quiver, order)}

    def power(d: DimVector) -> CommSeries:
        # prod_i u_i^(d_i), only needed up to degree limit - dim d
        cached = powers.get(d)
        if cached is not None:
            return cached
        k = next(i for i, a in enumerate(d) if a)
        lower = power(d - quiver.unit(k))
        value = lower.truncated_product(multipliers[k], limit - d.dim)
        powers[d] = value
        return value

    result: Dict[DimVector, Fraction] = {}
    for d, c in f.coefficients.items():
        if d.dim > limit:
            continue
        for e, b in power(d).coefficients.items():
            if d.dim + e.dim <= limit:
                key = d + e
                result[key] = result.get(key, Fraction(0)) + c * b
    return CommSeries(quiver, order, result)
