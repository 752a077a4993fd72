"""Representations of a quiver over a prime field F_p and their subrepresentations.

Vectors are tuples of residues, subspaces are frozensets of vectors and arrow
maps are numpy matrices reduced mod p. Everything here is brute force and is
guarded by the enumeration budgets.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from errors import BudgetExceeded, ConfigurationError, OracleError
from quivers.quiver import DimVector, Functional, Quiver, Slope, slope

Vector = Tuple[int, ...]
Subspace = FrozenSet[Vector]
Subrep = Tuple[Subspace, ...]

SUPPORTED_PRIMES = (2, 3)


def _check_prime(prime: int) -> None:
    if prime not in SUPPORTED_PRIMES:
        raise ConfigurationError(
            f"field size must be one of {SUPPORTED_PRIMES}, got {prime}"
        )


@lru_cache(maxsize=None)
def subspaces(n: int, prime: int) -> Tuple[Subspace, ...]:
    """Every subspace of F_p^n, smallest first."""
    zero = frozenset([(0,) * n])
    vectors = list(product(range(prime), repeat=n))
    found = {zero}
    frontier = [zero]
    while frontier:
        grown = []
        for space in frontier:
            for v in vectors:
                if v in space:
                    continue
                bigger = frozenset(
                    tuple((s_k + c * v_k) % prime for s_k, v_k in zip(s, v))
                    for s in space
                    for c in range(prime)
                )
                if bigger not in found:
                    found.add(bigger)
                    grown.append(bigger)
        frontier = grown
    return tuple(sorted(found, key=lambda space: (len(space), sorted(space))))


def subspace_dim(space: Subspace, prime: int) -> int:
    size, k = 1, 0
    while size < len(space):
        size *= prime
        k += 1
    return k


@dataclass(frozen=True, eq=False)
class FFRep:
    """Point of R_d over F_p: one d_t x d_s matrix per arrow s -> t."""

    quiver: Quiver
    prime: int
    dims: DimVector
    maps: Tuple[np.ndarray, ...]

    def image(self, arrow: int, space: Subspace) -> Subspace:
        matrix = self.maps[arrow]
        return frozenset(
            tuple(int(x) for x in matrix.dot(np.array(v, dtype=np.int64)) % self.prime)
            for v in space
        )

    @property
    def full(self) -> Subrep:
        return tuple(subspaces(a, self.prime)[-1] for a in self.dims)

    @property
    def zero(self) -> Subrep:
        return tuple(subspaces(a, self.prime)[0] for a in self.dims)

    def is_invariant(self, candidate: Subrep) -> bool:
        return all(
            self.image(k, candidate[source]) <= candidate[target]
            for k, (source, target) in enumerate(self.quiver.arrows)
        )

    def dim_vector(self, sub: Subrep) -> DimVector:
        return DimVector(subspace_dim(space, self.prime) for space in sub)


def representation_count(quiver: Quiver, d: Sequence[int], prime: int) -> int:
    """|R_d| = p^(sum over arrows s -> t of d_s d_t)."""
    return prime ** sum(d[source] * d[target] for source, target in quiver.arrows)


def enumerate_reps(
    quiver: Quiver, d: Sequence[int], prime: int, budget: int
) -> Iterator[FFRep]:
    """Yield every point of R_d over F_p exactly once.

    Raises:
        BudgetExceeded: If |R_d| exceeds ``budget``
    """
    _check_prime(prime)
    d = DimVector(d)
    required = representation_count(quiver, d, prime)
    if required > budget:
        raise BudgetExceeded("representations", required, budget)
    shapes = [(d[target], d[source]) for source, target in quiver.arrows]
    sizes = [rows * cols for rows, cols in shapes]
    for entries in product(range(prime), repeat=sum(sizes)):
        maps = []
        offset = 0
        for (rows, cols), size in zip(shapes, sizes):
            block = np.array(entries[offset : offset + size], dtype=np.int64)
            maps.append(block.reshape(rows, cols))
            offset += size
        yield FFRep(quiver, prime, d, tuple(maps))


@dataclass
class SubrepLattice:
    """All subrepresentations of one representation with their dimension vectors."""

    rep: FFRep
    elements: Tuple[Subrep, ...]
    dims: Tuple[DimVector, ...]

    def below(self, top: Subrep) -> List[Tuple[Subrep, DimVector]]:
        """Elements contained in ``top``."""
        return [
            (sub, dim)
            for sub, dim in zip(self.elements, self.dims)
            if all(u <= t for u, t in zip(sub, top))
        ]

    def is_semistable_sub(
        self,
        top: Subrep,
        top_dim: DimVector,
        theta: Functional,
        strict: bool = False,
    ) -> bool:
        """Semistability (or stability) of ``top`` viewed as a representation."""
        if top_dim.is_zero:
            return True
        mu = slope(theta, top_dim)
        for sub, dim in self.below(top):
            if dim.is_zero or dim == top_dim:
                continue
            value = slope(theta, dim)
            if value > mu or (strict and value == mu):
                return False
        return True

    def semistable_of_slope(
        self, theta: Functional, mu: Slope
    ) -> List[Tuple[Subrep, DimVector]]:
        """Slope-mu semistable subrepresentations, the zero one included."""
        members = []
        for sub, dim in zip(self.elements, self.dims):
            if dim.is_zero:
                members.append((sub, dim))
            elif slope(theta, dim) == mu and self.is_semistable_sub(sub, dim, theta):
                members.append((sub, dim))
        return members


def subrep_count(rep: FFRep) -> int:
    """Number of subspace tuples that subrep_lattice has to test."""
    total = 1
    for a in rep.dims:
        total *= len(subspaces(a, rep.prime))
    return total


def subrep_lattice(rep: FFRep, budget: int) -> SubrepLattice:
    """Filter all subspace tuples for arrow invariance.

    Raises:
        BudgetExceeded: If the number of subspace tuples exceeds ``budget``
    """
    required = subrep_count(rep)
    if required > budget:
        raise BudgetExceeded("subspace tuples", required, budget)
    elements = tuple(
        candidate
        for candidate in product(*(subspaces(a, rep.prime) for a in rep.dims))
        if rep.is_invariant(candidate)
    )
    return SubrepLattice(rep, elements, tuple(rep.dim_vector(sub) for sub in elements))


def is_semistable(rep: FFRep, theta: Functional, lattice: SubrepLattice) -> bool:
    """mu(U) <= mu(M) for every non-zero proper subrepresentation U."""
    return lattice.is_semistable_sub(rep.full, rep.dims, theta)


def is_stable(rep: FFRep, theta: Functional, lattice: SubrepLattice) -> bool:
    """mu(U) < mu(M) for every non-zero proper subrepresentation U."""
    return lattice.is_semistable_sub(rep.full, rep.dims, theta, strict=True)


def hn_filtration(
    rep: FFRep, theta: Functional, lattice: SubrepLattice
) -> List[Subrep]:
    """0 = M_0 < M_1 < ... < M_s = M, each step the maximal destabilizing piece.

    M_{k+1} is the largest subrepresentation containing M_k among those
    maximizing the slope of dim M_{k+1} - dim M_k.

    Raises:
        OracleError: If the maximal destabilizing piece is not unique
    """
    current, current_dim = rep.zero, rep.dims * 0
    steps: List[Subrep] = []
    while current_dim != rep.dims:
        best: Optional[Tuple[Fraction, int]] = None
        chosen: List[Subrep] = []
        for sub, dim in zip(lattice.elements, lattice.dims):
            if dim == current_dim or not all(c <= u for c, u in zip(current, sub)):
                continue
            key = (slope(theta, dim - current_dim), dim.dim)
            if best is None or key > best:
                best, chosen = key, [sub]
            elif key == best:
                chosen.append(sub)
        if len(chosen) != 1:
            raise OracleError(f"HN step above {tuple(current_dim)} is not unique")
        current = chosen[0]
        current_dim = rep.dim_vector(current)
        steps.append(current)
    return steps


def hn_type(
    rep: FFRep, theta: Functional, lattice: SubrepLattice
) -> Tuple[DimVector, ...]:
    """Dimension vectors of the HN subquotients, slopes strictly decreasing."""
    previous = rep.dims * 0
    parts = []
    for step in hn_filtration(rep, theta, lattice):
        dim = rep.dim_vector(step)
        parts.append(dim - previous)
        previous = dim
    return tuple(parts)


def framing_data(
    rep: FFRep, n: Sequence[int]
) -> Iterator[Tuple[Tuple[Vector, ...], ...]]:
    """All morphisms P^(n) -> M, as n_i vectors of M_i at each vertex i."""
    per_vertex = [
        list(product(list(product(range(rep.prime), repeat=a)), repeat=k))
        for a, k in zip(rep.dims, n)
    ]
    return product(*per_vertex)


def intersect(first: Subrep, second: Subrep) -> Subrep:
    return tuple(a & b for a, b in zip(first, second))


def slope_closure(
    rep: FFRep,
    vectors: Sequence[Sequence[Vector]],
    members: Sequence[Tuple[Subrep, DimVector]],
) -> Subrep:
    """<U>_mu, the meet of the slope-mu semistable subrepresentations containing U."""
    closure = rep.full
    for sub, _ in members:
        if all(set(vs) <= space for vs, space in zip(vectors, sub)):
            closure = intersect(closure, sub)
    return closure


