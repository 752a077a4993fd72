"""Positive roots of Dynkin quivers."""

from fractions import Fraction
from itertools import product
from typing import List

from errors import NotDynkin
from quivers.quiver import DimVector, Quiver

# the highest root of E8 has largest coordinate 6
ROOT_ENTRY_BOUND = 6


def tits_form(quiver: Quiver, d: DimVector) -> int:
    return quiver.euler_form(d, d)


def _leading_minors_positive(quiver: Quiver) -> bool:
    r = quiver.rank
    counts = quiver.arrow_counts
    matrix = [
        [
            (
                Fraction(1 - counts[k][k])
                if k == l
                else Fraction(-(counts[k][l] + counts[l][k]), 2)
            )
            for l in range(r)
        ]
        for k in range(r)
    ]
    # Sylvester: the Tits form is positive definite iff every pivot is positive
    for col in range(r):
        pivot = matrix[col][col]
        if pivot <= 0:
            return False
        for row in range(col + 1, r):
            factor = matrix[row][col] / pivot
            for k in range(col, r):
                matrix[row][k] -= factor * matrix[col][k]
    return True


def _non_positive_witness(quiver: Quiver) -> DimVector:
    for bound in range(1, ROOT_ENTRY_BOUND + 1):
        box = product(range(bound + 1), repeat=quiver.rank)
        candidates = sorted((DimVector(d) for d in box if any(d)), key=lambda d: d.dim)
        for d in candidates:
            if tits_form(quiver, d) <= 0:
                return d
    return DimVector.zero(quiver.rank)


def is_dynkin(quiver: Quiver) -> bool:
    return _leading_minors_positive(quiver)


def positive_roots(quiver: Quiver) -> List[DimVector]:
    """All d in Lambda^+ \\ {0} with <d, d> = 1.

    Roots are grown from the simple roots by adding one simple root at a time
    while staying inside {<d, d> = 1}, entries bounded by ROOT_ENTRY_BOUND;
    for Dynkin quivers every positive root is reached this way.

    Raises:
        NotDynkin: If the Tits form is not positive definite
    """
    if not is_dynkin(quiver):
        raise NotDynkin(_non_positive_witness(quiver))
    simple = [quiver.unit(k) for k in range(quiver.rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        grown = []
        for alpha in frontier:
            for e in simple:
                beta = alpha + e
                if beta in roots or max(beta) > ROOT_ENTRY_BOUND:
                    continue
                if tits_form(quiver, beta) == 1:
                    roots.add(beta)
                    grown.append(beta)
        frontier = grown
    return sorted(roots, key=lambda d: (d.dim, tuple(-a for a in d)))


def real_roots(quiver: Quiver, order: int) -> List[DimVector]:
    """Every d with dim d <= order and <d, d> = 1, for any acyclic quiver."""
    return [d for d in quiver.dimension_vectors(order) if tits_form(quiver, d) == 1]
