"""Intersection graphs G_n(Z_m) of ideals of Z_m.

Thin wrapper over the compiled extension: graph construction, structural
planarity / outerplanarity / ring-graph deciders, closed-form
classification tables, and exhaustive cross-validation sweeps.
"""

from ._core import (
    Classification,
    IdealGraph,
    ModulePair,
    SweepSummary,
    __version__,
    build_graph,
    classify,
    factorize,
    graph_dot,
    graph_json,
    proper_nontrivial_divisors,
    sweep,
    validate_module_pair,
    verify_adjacency_criterion,
)

__all__ = [
    "Classification",
    "IdealGraph",
    "ModulePair",
    "SweepSummary",
    "__version__",
    "build_graph",
    "classify",
    "factorize",
    "graph_dot",
    "graph_json",
    "proper_nontrivial_divisors",
    "sweep",
    "validate_module_pair",
    "verify_adjacency_criterion",
]
