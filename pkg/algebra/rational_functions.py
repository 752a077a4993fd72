"""Laurent polynomials and rational functions in one variable q.

Polynomials are sympy ``PolyElement`` values over ``ZZ``; a ``QRational`` is
kept in canonical form (coprime numerator and denominator, denominator with
positive leading coefficient, unit integer content across the pair) so that
equality is structural.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from errors import DivisionByZero, NotLaurentIntegral, PoleAt

POLY_RING, Q = ring("q", ZZ)

Scalar = Union[int, Fraction]


def _poly_from_exponents(coefficients: Mapping[int, int]) -> PolyElement:
    """Build a polynomial from a map of nonnegative exponents to coefficients."""
    return POLY_RING.from_dict({(e,): int(c) for e, c in coefficients.items() if c})


def _poly_items(p: PolyElement) -> List[Tuple[int, int]]:
    return sorted((monom[0], int(coeff)) for monom, coeff in p.items())


def _eval_poly(p: PolyElement, point: Fraction) -> Fraction:
    total = Fraction(0)
    for exponent, coeff in _poly_items(p):
        total += coeff * point**exponent
    return total


def _low_degree(p: PolyElement) -> int:
    return min(monom[0] for monom in p.itermonoms()) if p else 0


@dataclass(frozen=True)
class QLaurent:
    """Element of Z[q, q^-1] stored as exponent -> nonzero integer."""

    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coefficients: Mapping[int, int]) -> "QLaurent":
        terms = ((int(e), int(c)) for e, c in coefficients.items() if c)
        return cls(tuple(sorted(terms)))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QLaurent":
        return cls.from_dict({exponent: coefficient})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def valuation(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def coefficient_list(self) -> List[int]:
        """Dense coefficients from ``valuation`` up to ``degree``."""
        if not self.terms:
            return []
        coefficients = self.as_dict()
        return [coefficients.get(e, 0) for e in range(self.valuation, self.degree + 1)]

    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def evaluate(self, point: Scalar) -> Fraction:
        point = Fraction(point)
        if point == 0 and self.valuation < 0:
            raise PoleAt(point)
        return sum((Fraction(c) * point**e for e, c in self.terms), Fraction(0))

    def __add__(self, other: "QLaurent") -> "QLaurent":
        merged = self.as_dict()
        for e, c in other.terms:
            merged[e] = merged.get(e, 0) + c
        return QLaurent.from_dict(merged)

    def __neg__(self) -> "QLaurent":
        return QLaurent(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        return self + (-other)

    def __mul__(self, other: "QLaurent") -> "QLaurent":
        product: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return QLaurent.from_dict(product)

    def to_rational(self) -> "QRational":
        if not self.terms:
            return QRational.zero()
        shift = min(0, self.valuation)
        numerator = _poly_from_exponents({e - shift: c for e, c in self.terms})
        return QRational(numerator, Q ** (-shift))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in reversed(self.terms))


class QRational:
    """Element of Q(q) in canonical form."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num: PolyElement, den: PolyElement = POLY_RING.one):
        if not den:
            raise DivisionByZero("denominator is the zero polynomial")
        num, den = num.cancel(den)
        if den.LC < 0:
            num, den = -num, -den
        self.num = num
        self.den = den
        self._key = (tuple(_poly_items(num)), tuple(_poly_items(den)))

    @classmethod
    def zero(cls) -> "QRational":
        return _ZERO

    @classmethod
    def one(cls) -> "QRational":
        return _ONE

    @classmethod
    def from_int(cls, value: int) -> "QRational":
        return cls(POLY_RING(int(value)))

    @classmethod
    def from_fraction(cls, value: Fraction) -> "QRational":
        value = Fraction(value)
        return cls(POLY_RING(value.numerator), POLY_RING(value.denominator))

    @classmethod
    def q_power(cls, exponent: int) -> "QRational":
        if exponent >= 0:
            return cls(Q**exponent)
        return cls(POLY_RING.one, Q ** (-exponent))

    @classmethod
    def from_coefficients(
        cls, numerator: Iterable[int], denominator: Iterable[int] = (1,), shift: int = 0
    ) -> "QRational":
        """Build q^shift * num/den from ascending coefficient lists."""
        num = _poly_from_exponents(dict(enumerate(numerator)))
        den = _poly_from_exponents(dict(enumerate(denominator)))
        return cls(num, den) * cls.q_power(shift)

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    def laurent_parts(self) -> Tuple[int, List[int], List[int]]:
        """Split into (shift, num, den) with value q^shift * num/den.

        Both num(0) and den(0) are non-zero.
        """
        if self.is_zero:
            return 0, [], [1]
        low_num, low_den = _low_degree(self.num), _low_degree(self.den)

        def dense(p: PolyElement, low: int) -> List[int]:
            items = dict(_poly_items(p))
            return [items.get(e, 0) for e in range(low, p.degree() + 1)]

        return low_num - low_den, dense(self.num, low_num), dense(self.den, low_den)

    def __add__(self, other: "QRational") -> "QRational":
        if self.den == other.den:
            return QRational(self.num + other.num, self.den)
        return QRational(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "QRational":
        return QRational(-self.num, self.den)

    def __sub__(self, other: "QRational") -> "QRational":
        return self + (-other)

    def __mul__(self, other: "QRational") -> "QRational":
        if self.is_zero or other.is_zero:
            return _ZERO
        return QRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "QRational") -> "QRational":
        if other.is_zero:
            raise DivisionByZero(f"division of {self} by zero")
        return QRational(self.num * other.den, self.den * other.num)

    def __pow__(self, exponent: int) -> "QRational":
        if exponent < 0:
            return _ONE / (self ** (-exponent))
        return QRational(self.num**exponent, self.den**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QRational.from_int(other)
        if not isinstance(other, QRational):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"QRational(({self.num})/({self.den}))"

    def __str__(self) -> str:
        if self.den == POLY_RING.one:
            return str(self.num)
        return f"({self.num})/({self.den})"


_ZERO = QRational(POLY_RING.zero)
_ONE = QRational(POLY_RING.one)


def evaluate(f: QRational, point: Scalar) -> Fraction:
    """Exact value f(point).

    Raises:
        PoleAt: If the reduced denominator vanishes at ``point``
    """
    point = Fraction(point)
    denominator = _eval_poly(f.den, point)
    if denominator == 0:
        raise PoleAt(point)
    return _eval_poly(f.num, point) / denominator


def as_laurent(f: QRational) -> QLaurent:
    """Return f as an element of Z[q, q^-1].

    Raises:
        NotLaurentIntegral: If the reduced denominator is not a monic monomial
    """
    den_items = _poly_items(f.den)
    if len(den_items) != 1 or den_items[0][1] != 1:
        raise NotLaurentIntegral(f"denominator {f.den}")
    shift = den_items[0][0]
    return QLaurent.from_dict({e - shift: c for e, c in _poly_items(f.num)})
