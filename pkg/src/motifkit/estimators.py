"""Structural-parameter computation: deletion sets, path decompositions,
clique-cover validation, and a small exact max-leaf oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .core import CapacityError, Graph, InputError, connected_components


def min_vertex_cover(g: Graph, limit: Optional[int] = None) -> Optional[Set[int]]:
    """A minimum vertex cover by iterative-deepening 2-way edge branching.

    With a limit, gives up and returns None once the minimum provably
    exceeds it (used for cheap parameter probing).
    """
    edges = g.edges()
    if not edges:
        return set()

    def branch(covered: Set[int], budget: int) -> Optional[Set[int]]:
        for u, v in edges:
            if u not in covered and v not in covered:
                if budget == 0:
                    return None
                for w in (u, v):
                    covered.add(w)
                    res = branch(covered, budget - 1)
                    if res is not None:
                        return res
                    covered.remove(w)
                return None
        return set(covered)

    cap = g.n if limit is None else min(limit, g.n)
    for k in range(cap + 1):
        res = branch(set(), k)
        if res is not None:
            return res
    if limit is not None:
        return None
    raise AssertionError("unreachable")


def dist_to_clique_set(g: Graph, limit: Optional[int] = None) -> Optional[Set[int]]:
    """Minimum set whose removal leaves a clique: vertex cover of the complement."""
    return min_vertex_cover(g.complement(), limit)


def _find_co_p3(g: Graph) -> Optional[Tuple[int, int, int]]:
    """An induced edge-plus-isolated-vertex triple, if one exists."""
    for u, v in g.edges():
        nu = set(g.adjacency[u])
        nv = set(g.adjacency[v])
        for w in range(g.n):
            if w != u and w != v and w not in nu and w not in nv:
                return (u, v, w)
    return None


def dist_to_co_cluster_set(
    g: Graph, limit: Optional[int] = None
) -> Optional[Set[int]]:
    """Minimum deletion set leaving a co-cluster, by 3-way branching.

    With a limit, returns None once the minimum provably exceeds it.
    """

    def branch(removed: Set[int], budget: int) -> Optional[Set[int]]:
        sub, remap = g.induced([v for v in range(g.n) if v not in removed])
        back = {i: v for v, i in remap.items()}
        bad = _find_co_p3(sub)
        if bad is None:
            return set(removed)
        if budget == 0:
            return None
        for x in bad:
            v = back[x]
            removed.add(v)
            res = branch(removed, budget - 1)
            if res is not None:
                return res
            removed.remove(v)
        return None

    cap = g.n if limit is None else min(limit, g.n)
    for k in range(cap + 1):
        res = branch(set(), k)
        if res is not None:
            return res
    if limit is not None:
        return None
    raise AssertionError("unreachable")


def is_co_cluster(g: Graph) -> bool:
    return _find_co_p3(g) is None


def co_cluster_classes(g: Graph) -> List[List[int]]:
    """Maximal independent classes of a co-cluster: components of the complement."""
    if not is_co_cluster(g):
        raise InputError("graph is not a co-cluster")
    return connected_components(g.complement(), range(g.n))


@dataclass
class PathComponent:
    """A maximal path of G-S in path order, with its end attachments into S."""

    vertices: Tuple[int, ...]
    first_attach: Tuple[int, ...]  # S-neighbors of the first vertex
    last_attach: Tuple[int, ...]  # S-neighbors of the last vertex


def degree3_decomposition(g: Graph) -> Tuple[Set[int], List[PathComponent]]:
    """Vertices of degree >= 3 plus the maximal paths of the rest.

    Requires a connected graph that is not a cycle; every component of G-S is
    then an induced path.
    """
    if g.n == 0:
        raise InputError("empty graph")
    if len(connected_components(g, range(g.n))) != 1:
        raise InputError("graph must be connected")
    s = {v for v in range(g.n) if g.degree(v) >= 3}
    if not s and all(g.degree(v) == 2 for v in range(g.n)):
        raise InputError("cycle graph: use the direct cycle solver")

    rest = [v for v in range(g.n) if v not in s]
    paths: List[PathComponent] = []
    for comp in connected_components(g, rest):
        inside = set(comp)
        ends = [v for v in comp if sum(1 for w in g.adjacency[v] if w in inside) <= 1]
        if not ends:
            raise InputError("cycle component in G-S; input is not as expected")
        start = min(ends)
        ordered = [start]
        prev = None
        cur = start
        while True:
            nxt = [w for w in g.adjacency[cur] if w in inside and w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ordered.append(cur)
        assert len(ordered) == len(comp)
        first_attach = tuple(w for w in g.adjacency[ordered[0]] if w in s)
        last_attach = tuple(w for w in g.adjacency[ordered[-1]] if w in s)
        paths.append(PathComponent(tuple(ordered), first_attach, last_attach))
    return s, paths


def validate_clique_cover(g: Graph, cliques: Sequence[Sequence[int]], mode: str) -> bool:
    """Check a clique family: vertex partition or edge coverage."""
    if mode not in ("vertex-partition", "edge-cover"):
        raise InputError(f"unknown mode {mode!r}")
    for c in cliques:
        if len(set(c)) != len(c):
            return False
        if any(not (0 <= v < g.n) for v in c):
            return False
        if not g.is_clique(c):
            return False
    if mode == "vertex-partition":
        seen: Set[int] = set()
        for c in cliques:
            if seen & set(c):
                return False
            seen.update(c)
        return seen == set(range(g.n))
    covered = set()
    for c in cliques:
        covered.update((min(u, v), max(u, v)) for u, v in combinations(c, 2))
    return set(g.edges()) <= covered


def max_leaf_oracle(g: Graph) -> int:
    """Exact max leaf number for small connected graphs.

    Uses the classical correspondence between spanning trees with many leaves
    and small connected dominating sets: for n >= 3, ml(G) = n - min |D| over
    connected dominating sets D.
    """
    if g.n > 10:
        raise CapacityError("max_leaf_oracle is limited to n <= 10")
    if len(connected_components(g, range(g.n))) != 1:
        raise InputError("graph must be connected")
    if g.n == 1:
        return 1
    if g.n == 2:
        return 2
    all_v = set(range(g.n))
    for size in range(1, g.n + 1):
        for d in combinations(range(g.n), size):
            dominated = set(d)
            for v in d:
                dominated.update(g.adjacency[v])
            if dominated != all_v:
                continue
            if len(connected_components(g, d)) == 1:
                return g.n - size
    raise AssertionError("unreachable for connected graphs")


@dataclass
class ParamReport:
    """Structural parameters of a graph, each with a witness set.

    Deletion-set fields are None when a probe limit was given and the
    parameter exceeds it.
    """

    vertex_cover: Optional[Set[int]]
    dist_to_clique: Optional[Set[int]]
    dist_to_co_cluster: Optional[Set[int]]
    degree3_set: Set[int]
    path_decomposition: Optional[List[PathComponent]]
    supplied_cover_valid: Dict[str, bool] = field(default_factory=dict)


def param_report(
    g: Graph,
    vertex_clique_cover: Optional[Sequence[Sequence[int]]] = None,
    edge_clique_cover: Optional[Sequence[Sequence[int]]] = None,
    limit: Optional[int] = None,
) -> ParamReport:
    degree3 = {v for v in range(g.n) if g.degree(v) >= 3}
    paths: Optional[List[PathComponent]] = None
    try:
        _, paths = degree3_decomposition(g)
    except InputError:
        paths = None
    report = ParamReport(
        vertex_cover=min_vertex_cover(g, limit),
        dist_to_clique=dist_to_clique_set(g, limit),
        dist_to_co_cluster=dist_to_co_cluster_set(g, limit),
        degree3_set=degree3,
        path_decomposition=paths,
    )
    if vertex_clique_cover is not None:
        report.supplied_cover_valid["vertex-partition"] = validate_clique_cover(
            g, vertex_clique_cover, "vertex-partition"
        )
    if edge_clique_cover is not None:
        report.supplied_cover_valid["edge-cover"] = validate_clique_cover(
            g, edge_clique_cover, "edge-cover"
        )
    return report


def greedy_vertex_clique_cover(g: Graph) -> List[List[int]]:
    """A (not necessarily minimum) partition of the vertices into cliques."""
    remaining = set(range(g.n))
    cover: List[List[int]] = []
    while remaining:
        v = min(remaining)
        clique = [v]
        for u in sorted(remaining):
            if u != v and all(g.has_edge(u, w) for w in clique):
                clique.append(u)
        remaining -= set(clique)
        cover.append(sorted(clique))
    return cover
