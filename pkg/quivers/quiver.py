"""Quivers without oriented cycles, dimension vectors, forms and slopes."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from errors import ConfigurationError, CyclicQuiver, UnknownVertex, ZeroDimVector

Slope = Fraction


class DimVector(tuple):
    """Element of Z^I, positions following the quiver's admissible vertex order."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> "DimVector":
        return super().__new__(cls, tuple(int(e) for e in entries))

    @classmethod
    def zero(cls, rank: int) -> "DimVector":
        return cls((0,) * rank)

    @classmethod
    def unit(cls, rank: int, index: int) -> "DimVector":
        return cls(1 if k == index else 0 for k in range(rank))

    def __add__(self, other: Sequence[int]) -> "DimVector":  # type: ignore[override]
        return DimVector(a + b for a, b in zip(self, other))

    def __sub__(self, other: Sequence[int]) -> "DimVector":
        return DimVector(a - b for a, b in zip(self, other))

    def __mul__(self, k: int) -> "DimVector":  # type: ignore[override]
        return DimVector(k * a for a in self)

    __rmul__ = __mul__

    @property
    def dim(self) -> int:
        return sum(self)

    @property
    def is_zero(self) -> bool:
        return not any(self)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self)

    def fits_in(self, other: Sequence[int]) -> bool:
        """Componentwise self <= other."""
        return all(a <= b for a, b in zip(self, other))

    def support(self) -> Tuple[int, ...]:
        return tuple(k for k, a in enumerate(self) if a)

    def __repr__(self) -> str:
        return f"DimVector({tuple(self)})"


@dataclass(frozen=True)
class Functional:
    """Integer functional on Z^I; n in Lambda acts as d -> sum n_i d_i."""

    weights: Tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "Functional":
        return cls((0,) * rank)

    @classmethod
    def unit(cls, rank: int, index: int) -> "Functional":
        return cls(tuple(DimVector.unit(rank, index)))

    @classmethod
    def from_vector(cls, n: Sequence[int]) -> "Functional":
        return cls(tuple(int(a) for a in n))

    def __call__(self, d: Sequence[int]) -> int:
        return sum(w * a for w, a in zip(self.weights, d))

    def __add__(self, other: "Functional") -> "Functional":
        return Functional(tuple(a + b for a, b in zip(self.weights, other.weights)))

    def __neg__(self) -> "Functional":
        return Functional(tuple(-a for a in self.weights))

    def __sub__(self, other: "Functional") -> "Functional":
        return self + (-other)

    def scale(self, k: int) -> "Functional":
        return Functional(tuple(k * a for a in self.weights))

    def is_framing(self) -> bool:
        """True when the functional is n. for some n in Lambda^+."""
        return all(a >= 0 for a in self.weights)


@dataclass(frozen=True)
class Stability(Functional):
    """The stability functional Theta."""

    def is_constant_on(self, support: Iterable[int]) -> bool:
        return len({self.weights[k] for k in support}) <= 1


@dataclass(frozen=True)
class Quiver:
    """Finite quiver with vertices stored in an admissible order.

    Arrows are (source, target) index pairs and always go from a higher
    index to a lower one.
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.vertices)

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def arrow_counts(self) -> Tuple[Tuple[int, ...], ...]:
        counts = [[0] * self.rank for _ in range(self.rank)]
        for source, target in self.arrows:
            counts[source][target] += 1
        return tuple(tuple(row) for row in counts)

    def index(self, vertex: str) -> int:
        try:
            return self._positions[vertex]
        except KeyError:
            raise UnknownVertex(vertex) from None

    def unit(self, index: int) -> DimVector:
        return DimVector.unit(self.rank, index)

    def zero(self) -> DimVector:
        return DimVector.zero(self.rank)

    def dim_vector(self, entries: Mapping[str, int]) -> DimVector:
        """Build a dimension vector from a vertex-name map (missing vertices are 0)."""
        values = [0] * self.rank
        for vertex, value in entries.items():
            if int(value) < 0:
                raise ConfigurationError(f"negative dimension at vertex {vertex!r}")
            values[self.index(vertex)] = int(value)
        return DimVector(values)

    def as_mapping(self, d: Sequence[int]) -> Dict[str, int]:
        return {v: int(a) for v, a in zip(self.vertices, d)}

    def euler_form(self, d: Sequence[int], e: Sequence[int]) -> int:
        value = sum(a * b for a, b in zip(d, e))
        for source, target in self.arrows:
            value -= d[source] * e[target]
        return value

    def skew_form(self, d: Sequence[int], e: Sequence[int]) -> int:
        return self.euler_form(d, e) - self.euler_form(e, d)

    def b(self, i: int, j: int) -> int:
        return self.skew_form(self.unit(i), self.unit(j))

    def skew_functional(self, e: Sequence[int]) -> Functional:
        """The functional {_, e}."""
        return Functional(
            tuple(self.skew_form(self.unit(k), e) for k in range(self.rank))
        )

    def dimension_vectors(self, order: int) -> Tuple[DimVector, ...]:
        """All non-zero d with dim d <= order, sorted by total dimension."""
        return _dimension_vectors(self.rank, order)

    def sub_vectors(self, d: Sequence[int]) -> List[DimVector]:
        """All e with 0 <= e <= d componentwise, including 0 and d."""
        return [DimVector(e) for e in product(*(range(a + 1) for a in d))]

    def format(self, d: Sequence[int]) -> str:
        parts = [f"{a}{v}" if a != 1 else v for v, a in zip(self.vertices, d) if a]
        return "+".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _dimension_vectors(rank: int, order: int) -> Tuple[DimVector, ...]:
    vectors = [
        DimVector(d)
        for d in product(range(order + 1), repeat=rank)
        if 0 < sum(d) <= order
    ]
    return tuple(sorted(vectors, key=lambda d: (d.dim, tuple(-a for a in d))))


def load_quiver(description: Mapping[str, Any]) -> Quiver:
    """Validate a quiver description and put its vertices in admissible order.

    Args:
        description: Mapping with "vertices" (list of names) and "arrows"
            (list of [source, target] pairs; repeats are parallel arrows)

    Returns:
        Quiver whose vertex order is a stable topological sort: among the
        vertices whose outgoing arrows all land in already placed vertices,
        the earliest in input order comes next

    Raises:
        UnknownVertex: If an arrow names an undeclared vertex
        CyclicQuiver: If the arrows contain an oriented cycle
    """
    names = [str(v) for v in description.get("vertices", [])]
    if len(set(names)) != len(names):
        raise ConfigurationError("duplicate vertex names")
    declared = set(names)
    raw_arrows: List[Tuple[str, str]] = []
    for arrow in description.get("arrows", []):
        source, target = (str(x) for x in arrow)
        for vertex in (source, target):
            if vertex not in declared:
                raise UnknownVertex(vertex)
        raw_arrows.append((source, target))

    targets: Dict[str, List[str]] = {v: [] for v in names}
    for source, target in raw_arrows:
        targets[source].append(target)

    placed: List[str] = []
    remaining = list(names)
    while remaining:
        ready = next(
            (v for v in remaining if all(t in placed for t in targets[v])),
            None,
        )
        if ready is None:
            raise CyclicQuiver(_find_cycle(remaining, targets))
        placed.append(ready)
        remaining.remove(ready)

    position = {v: k for k, v in enumerate(placed)}
    arrows = tuple((position[s], position[t]) for s, t in raw_arrows)
    return Quiver(vertices=tuple(placed), arrows=arrows)


def _find_cycle(remaining: List[str], targets: Dict[str, List[str]]) -> List[str]:
    # every remaining vertex has an arrow into the remaining set, so walking
    # such arrows must revisit a vertex
    pool = set(remaining)
    path = [remaining[0]]
    seen = {remaining[0]: 0}
    while True:
        current = path[-1]
        nxt = next(t for t in targets[current] if t in pool)
        if nxt in seen:
            return path[seen[nxt]:] + [nxt]
        seen[nxt] = len(path)
        path.append(nxt)


def load_stability(quiver: Quiver, theta: Mapping[str, int]) -> Stability:
    """Build Theta from a vertex-name map (missing vertices weigh 0)."""
    weights = [0] * quiver.rank
    for vertex, value in theta.items():
        weights[quiver.index(vertex)] = int(value)
    return Stability(tuple(weights))


def slope(theta: Functional, d: Sequence[int]) -> Slope:
    """mu(d) = Theta(d) / dim d.

    Raises:
        ZeroDimVector: If d = 0
    """
    total = sum(d)
    if total == 0:
        raise ZeroDimVector("slope of the zero dimension vector")
    return Fraction(theta(d), total)


def slope_classes(
    quiver: Quiver, theta: Functional, order: int
) -> Dict[Slope, List[DimVector]]:
    """Partition {d : 0 < dim d <= order} by slope, keys in decreasing order."""
    classes: Dict[Slope, List[DimVector]] = {}
    for d in quiver.dimension_vectors(order):
        classes.setdefault(slope(theta, d), []).append(d)
    return {mu: classes[mu] for mu in sorted(classes, reverse=True)}


def is_coprime(theta: Functional, d: Sequence[int]) -> Tuple[bool, DimVector]:
    """Check mu(e) != mu(d) for all 0 < e < d; returns (ok, witness)."""
    d = DimVector(d)
    mu = slope(theta, d)
    for e in (DimVector(e) for e in product(*(range(a + 1) for a in d))):
        if e.is_zero or e == d:
            continue
        if slope(theta, e) == mu:
            return False, e
    return True, DimVector.zero(len(d))
