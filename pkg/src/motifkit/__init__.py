"""Exact solvers, estimators, and hard-instance generators for Graph Motif."""

from .core import (
    CapacityError,
    Graph,
    InputError,
    Instance,
    Motif,
    SolveOutcome,
    connected_components,
    format_instance,
    format_witness,
    parse_instance,
    parse_witness,
    prune_wrong_colors,
    verify_solution,
)

__all__ = [
    "CapacityError",
    "Graph",
    "InputError",
    "Instance",
    "Motif",
    "SolveOutcome",
    "connected_components",
    "format_instance",
    "format_witness",
    "parse_instance",
    "parse_witness",
    "prune_wrong_colors",
    "verify_solution",
]

__version__ = "0.1.0"
