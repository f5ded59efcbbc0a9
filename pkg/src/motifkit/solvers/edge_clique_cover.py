"""Solver using a supplied edge clique cover.

Guess which cover cliques meet the solution, replace them by a bipartite
incidence graph with a fresh color on the clique side, and dispatch to the
vertex-cover solver.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..core import Graph, InputError, Instance, Motif, SolveOutcome, connected_components
from ..estimators import validate_clique_cover
from .common import dispatch_components_with_cover, try_witness
from .vertex_cover import _solve_connected as _solve_vc_connected


def solve_edge_clique_cover(
    inst: Instance, cover: Sequence[Sequence[int]]
) -> SolveOutcome:
    """Exact answer given a family of cliques containing every edge."""
    if not validate_clique_cover(inst.graph, cover, "edge-cover"):
        raise InputError("supplied family is not an edge clique cover")
    return dispatch_components_with_cover(inst, cover, _solve_connected)


def _solve_connected(inst: Instance, cover: List[List[int]]) -> SolveOutcome:
    g = inst.graph
    motif = inst.motif

    # Single-vertex solutions need no clique at all.
    if motif.total == 1:
        color = motif.colors()[0]
        for v in range(g.n):
            if inst.coloring[v] == color:
                return SolveOutcome.yes([v])
        return SolveOutcome.no()

    cliques = [sorted(set(c)) for c in cover if len(c) >= 1]
    # Cliques covering a spanning tree of the solution suffice, so
    # subfamilies of size at most |M|-1 are enough to enumerate.
    max_size = min(len(cliques), motif.total - 1)
    for size in range(1, max_size + 1):
        for family in combinations(range(len(cliques)), size):
            outcome = _try_family(inst, [cliques[i] for i in family])
            if outcome is not None:
                return outcome
    return SolveOutcome.no()


def _try_family(inst: Instance, family: List[List[int]]) -> Optional[SolveOutcome]:
    motif = inst.motif
    union = sorted({v for c in family for v in c})
    counts = Counter(inst.coloring[v] for v in union)
    if any(counts[c] < m for c, m in motif.multiplicities.items()):
        return None
    # The clique intersection graph must be connected, otherwise the
    # bipartite replacement graph cannot be either.
    k = len(family)
    sets = [set(c) for c in family]
    meta = Graph(
        k,
        [
            (i, j)
            for i in range(k)
            for j in range(i + 1, k)
            if sets[i] & sets[j]
        ],
    )
    if len(connected_components(meta, range(k))) != 1:
        return None

    # Bipartite incidence graph: clique nodes 0..k-1 (fresh color), then the
    # union vertices with their original colors.
    fresh = max(max(inst.coloring, default=0), max(motif.colors())) + 1
    index = {v: k + j for j, v in enumerate(union)}
    edges = [
        (i, index[v]) for i, clique in enumerate(family) for v in clique
    ]
    b = Graph(k + len(union), edges)
    coloring = tuple([fresh] * k + [inst.coloring[v] for v in union])
    new_motif = Motif({**motif.multiplicities, fresh: k})
    sub = Instance(b, coloring, new_motif)

    outcome = _solve_vc_connected(sub, set(range(k)))
    if not outcome.is_yes:
        return None
    witness = [union[w - k] for w in outcome.witness if w >= k]
    return try_witness(inst, witness)
