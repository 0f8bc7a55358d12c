"""Tetra-separations and the canonical decomposition of 4-connected graphs."""

import json

from ._tetradecomp import (
    CapabilityError,
    Graph,
    InputError,
    InvariantError,
    circular_saw,
    complete,
    cycle,
    cycle_of_cliques,
    double_wheel,
    double_wheel_of_triangles,
    generalised_double_wheel,
    is_4_angry,
    is_isomorphic,
    is_k_connected,
    is_quasi_k_connected,
    kkm,
    prism,
    random_k_connected,
    tetra_separations,
    totally_nested,
    wheel,
    ydelta,
)
from . import _tetradecomp as _core


def decompose(graph, method="characterization", max_vertices=24):
    """Decomposition of a 4-connected graph as a dict of nodes and edges."""
    return json.loads(_core._decompose(graph, method, max_vertices))


def tri_decompose(graph, method="characterization", max_vertices=24):
    """Decomposition of a 3-connected graph along its strict tri-separations."""
    return json.loads(_core._tri_decompose(graph, method, max_vertices))


def classify_4_angry(graph, max_vertices=24):
    return json.loads(_core._classify_4_angry(graph, max_vertices))


def pipeline(graph, max_vertices=24):
    """Every stage from connected components down to tetra-torsos."""
    return json.loads(_core._pipeline(graph, max_vertices))


__all__ = [
    "CapabilityError",
    "Graph",
    "InputError",
    "InvariantError",
    "circular_saw",
    "classify_4_angry",
    "complete",
    "cycle",
    "cycle_of_cliques",
    "decompose",
    "double_wheel",
    "double_wheel_of_triangles",
    "generalised_double_wheel",
    "is_4_angry",
    "is_isomorphic",
    "is_k_connected",
    "is_quasi_k_connected",
    "kkm",
    "pipeline",
    "prism",
    "random_k_connected",
    "tetra_separations",
    "totally_nested",
    "tri_decompose",
    "wheel",
    "ydelta",
]
