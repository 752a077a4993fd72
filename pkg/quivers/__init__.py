"""Quivers, dimension vectors, stabilities and root systems."""

from quivers.catalog import (
    dynkin_quiver,
    kronecker_quiver,
    kronecker_stability,
    single_vertex_quiver,
)
from quivers.quiver import (
    DimVector,
    Functional,
    Quiver,
    Slope,
    Stability,
    is_coprime,
    load_quiver,
    load_stability,
    slope,
    slope_classes,
)
from quivers.roots import positive_roots, real_roots

__all__ = [
    "dynkin_quiver",
    "kronecker_quiver",
    "kronecker_stability",
    "single_vertex_quiver",
    "DimVector",
    "Functional",
    "Quiver",
    "Slope",
    "Stability",
    "is_coprime",
    "load_quiver",
    "load_stability",
    "slope",
    "slope_classes",
    "positive_roots",
    "real_roots",
]
