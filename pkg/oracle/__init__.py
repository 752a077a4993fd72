"""Brute-force point counting over F_2 and F_3."""

from oracle.counting import (
    Budgets,
    count_semistable,
    count_stable,
    group_order,
    verify_framed_counts,
    verify_hn_strata,
    verify_oracle,
    verify_pd_counts,
    verify_stable_counts,
)
from oracle.representations import (
    FFRep,
    enumerate_reps,
    hn_type,
    is_semistable,
    is_stable,
    subrep_lattice,
    subspaces,
)

__all__ = [
    "Budgets",
    "count_semistable",
    "count_stable",
    "group_order",
    "verify_framed_counts",
    "verify_hn_strata",
    "verify_oracle",
    "verify_pd_counts",
    "verify_stable_counts",
    "FFRep",
    "enumerate_reps",
    "hn_type",
    "is_semistable",
    "is_stable",
    "subrep_lattice",
    "subspaces",
]
