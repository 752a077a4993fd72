"""Named quivers: the one-vertex quiver, Kronecker quivers and Dynkin quivers."""

import re
from typing import Dict, List, Tuple

from errors import ConfigurationError
from quivers.quiver import Quiver, Stability, load_quiver

ORIENTATIONS = ("linear", "alternating")


def single_vertex_quiver() -> Quiver:
    """Q^0: one vertex, no arrows."""
    return load_quiver({"vertices": ["1"], "arrows": []})


def kronecker_quiver(m: int) -> Quiver:
    """K_m: vertices i, j with m arrows j -> i."""
    if m < 0:
        raise ConfigurationError(f"number of Kronecker arrows must be >= 0, got {m}")
    return load_quiver({"vertices": ["i", "j"], "arrows": [["j", "i"]] * m})


def kronecker_stability(quiver: Quiver) -> Stability:
    """Theta = j^*."""
    return Stability(tuple(1 if v == "j" else 0 for v in quiver.vertices))


def _dynkin_edges(kind: str, n: int) -> List[Tuple[int, int]]:
    if kind == "A" and n >= 1:
        return [(k, k + 1) for k in range(1, n)]
    if kind == "D" and n >= 4:
        return [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    if kind == "E" and n in (6, 7, 8):
        # branch at vertex 3 of the chain 1 - ... - (n-1), extra vertex n
        return [(k, k + 1) for k in range(1, n - 1)] + [(3, n)]
    raise ConfigurationError(f"unsupported Dynkin type {kind}{n}")


def parse_dynkin_type(label: str) -> Tuple[str, int]:
    match = re.fullmatch(r"\s*([ADEade])\s*(\d+)\s*", label)
    if not match:
        raise ConfigurationError(f"invalid Dynkin type {label!r}")
    return match.group(1).upper(), int(match.group(2))


def dynkin_quiver(label: str, orientation: str = "linear") -> Quiver:
    """Dynkin quiver with vertices "1".."n".

    "linear" orients every edge {k, l} (k < l) as l -> k; "alternating"
    flips the edges whose lower endpoint is even, so vertices alternate
    between sinks and sources along the chain.
    """
    kind, n = parse_dynkin_type(label)
    if orientation not in ORIENTATIONS:
        raise ConfigurationError(
            f"orientation must be one of {ORIENTATIONS}, got {orientation!r}"
        )
    arrows = []
    for k, l in _dynkin_edges(kind, n):
        if orientation == "alternating" and k % 2 == 0:
            arrows.append([str(k), str(l)])
        else:
            arrows.append([str(l), str(k)])
    vertices = [str(k) for k in range(1, n + 1)]
    return load_quiver({"vertices": vertices, "arrows": arrows})


def catalog_description(quiver: Quiver) -> Dict[str, object]:
    """Description record for a quiver (inverse of load_quiver up to vertex order)."""
    return {
        "vertices": list(quiver.vertices),
        "arrows": [[quiver.vertices[s], quiver.vertices[t]] for s, t in quiver.arrows],
    }
