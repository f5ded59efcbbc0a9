"""Solver parameterized by distance to co-cluster.

Either the solution meets at most one independent class — then the deletion
set is a vertex cover of the relevant subgraph — or it meets two classes,
and adding all intra-class edges turns the rest of the graph into a clique.
"""

from __future__ import annotations

from typing import List, Optional, Set

from ..core import Graph, Instance, Motif, SolveOutcome, connected_components
from ..estimators import dist_to_co_cluster_set
from .common import dispatch_components, try_witness
from .dist_clique import _solve_connected as _solve_dc_connected
from .vertex_cover import _solve_connected as _solve_vc_connected


def solve_co_cluster(inst: Instance) -> SolveOutcome:
    """Exact answer via a computed distance-to-co-cluster deletion set."""
    return dispatch_components(inst, _solve_connected)


def _solve_connected(inst: Instance) -> SolveOutcome:
    g = inst.graph
    x = dist_to_co_cluster_set(g)
    rest = [v for v in range(g.n) if v not in x]
    rest_sub, _ = g.induced(rest)
    classes = [
        [rest[i] for i in comp]
        for comp in connected_components(rest_sub.complement(), range(len(rest)))
    ]

    # Case A: the solution meets at most one class, so it lives in
    # G[X + class] where X is a vertex cover.
    if not classes:
        return _solve_on_subset(inst, sorted(x), x)
    for cls in classes:
        outcome = _solve_on_subset(inst, sorted(x | set(cls)), x)
        if outcome.is_yes:
            return outcome

    # Case B: two vertices s, t from distinct classes are in the solution.
    # Intra-class edges are added (they cannot hurt: s and t glue the
    # classes together), making V minus X a clique.
    motif = inst.motif
    extra = [
        (u, v)
        for cls in classes
        for a, u in enumerate(cls)
        for v in cls[a + 1 :]
        if not g.has_edge(u, v)
    ]
    completed = Graph(g.n, g.edges() + extra)
    for i, cls_s in enumerate(classes):
        for cls_t in classes[i + 1 :]:
            for s in cls_s:
                for t in cls_t:
                    outcome = _try_pair(inst, completed, x, s, t)
                    if outcome is not None:
                        return outcome
    return SolveOutcome.no()


def _solve_on_subset(
    inst: Instance, vertices: List[int], cover: Set[int]
) -> SolveOutcome:
    if len(vertices) < inst.motif.total:
        return SolveOutcome.no()
    sub, remap = inst.graph.induced(vertices)
    back = {i: v for v, i in remap.items()}
    coloring = tuple(inst.coloring[v] for v in sorted(remap))
    sub_cover = {remap[v] for v in cover if v in remap}
    # The subgraph may be disconnected; try each component.
    for comp in connected_components(sub, range(sub.n)):
        comp_sub, comp_remap = sub.induced(comp)
        comp_back = {i: v for v, i in comp_remap.items()}
        comp_coloring = tuple(coloring[v] for v in sorted(comp_remap))
        comp_cover = {comp_remap[v] for v in sub_cover if v in comp_remap}
        outcome = _solve_vc_connected(
            Instance(comp_sub, comp_coloring, inst.motif), comp_cover
        )
        if outcome.is_yes:
            witness = [back[comp_back[v]] for v in outcome.witness]
            result = try_witness(inst, witness)
            if result is not None:
                return result
    return SolveOutcome.no()


def _try_pair(
    inst: Instance, completed: Graph, x: Set[int], s: int, t: int
) -> Optional[SolveOutcome]:
    motif = inst.motif
    if not motif.contains([inst.coloring[s], inst.coloring[t]]):
        return None
    if motif.total == 2:
        return try_witness(inst, [s, t])

    # Contract the (adjacent) pair s, t into one vertex carrying a fresh
    # color of multiplicity one, so the clique-distance solver is forced to
    # keep it.  Deleting the pair instead would be lossy: the rest of a
    # solution may only hang together through s or t.
    keep = [v for v in range(completed.n) if v not in (s, t)]
    remap = {v: i for i, v in enumerate(keep)}
    w = len(keep)
    fresh = 1 + max(max(inst.coloring), max(motif.multiplicities))
    edges = [
        (remap[u], remap[v])
        for u, v in completed.edges()
        if u in remap and v in remap
    ]
    merged_nbrs = {
        remap[u]
        for z in (s, t)
        for u in completed.adjacency[z]
        if u in remap
    }
    edges.extend((u, w) for u in sorted(merged_nbrs))
    sub = Graph(w + 1, edges)
    coloring = tuple(inst.coloring[v] for v in keep) + (fresh,)
    rest_motif = Motif(
        dict(motif.minus([inst.coloring[s], inst.coloring[t]]))
        | {fresh: 1}
    )
    sub_cover = {remap[v] for v in x if v in remap} | {w}
    # Only the component holding the contracted vertex can match.
    comp = next(
        c for c in connected_components(sub, range(sub.n)) if w in c
    )
    comp_sub, comp_remap = sub.induced(comp)
    comp_back = {i: v for v, i in comp_remap.items()}
    comp_coloring = tuple(coloring[v] for v in sorted(comp_remap))
    comp_cover = {comp_remap[v] for v in sub_cover if v in comp_remap}
    outcome = _solve_dc_connected(
        Instance(comp_sub, comp_coloring, rest_motif), comp_cover
    )
    if outcome.is_yes:
        chosen = {comp_back[v] for v in outcome.witness}
        y = [keep[v] for v in chosen if v != w]
        return try_witness(inst, y + [s, t])
    return None
