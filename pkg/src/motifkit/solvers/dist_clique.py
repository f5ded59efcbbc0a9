"""Solver parameterized by distance to clique.

Guess the part of the solution inside the deletion set, then cover its
components with clique vertices via the colored-set-cover dynamic program,
and complete with leftover clique vertices of the right colors.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..core import Instance, SolveOutcome, connected_components
from ..csct import CsctInstance, solve_csct
from ..estimators import dist_to_clique_set
from .common import dispatch_components, pick_by_colors, try_witness


def solve_dist_clique(
    inst: Instance, deletion_set: Optional[Set[int]] = None
) -> SolveOutcome:
    """Exact answer; deletion_set (V minus a clique) is computed if absent."""
    original = deletion_set

    def run(sub: Instance) -> SolveOutcome:
        if original is None:
            s = dist_to_clique_set(sub.graph)
        else:
            # The caller's set is for the original graph; restricting it to a
            # pruned component keeps "remove S, a clique remains" valid.
            s = _restrict_deletion_set(sub, original)
        return _solve_connected(sub, s)

    if original is None:
        return dispatch_components(inst, run)
    return _dispatch_with_set(inst, original)


def _dispatch_with_set(inst: Instance, deletion_set: Set[int]) -> SolveOutcome:
    from ..core import prune_wrong_colors, verify_solution

    pruned, remap = prune_wrong_colors(inst)
    back = {i: v for v, i in remap.items()}
    if pruned.graph.n == 0:
        return SolveOutcome.no()
    pruned_set = {remap[v] for v in deletion_set if v in remap}
    for comp in connected_components(pruned.graph, range(pruned.graph.n)):
        if len(comp) < inst.motif.total:
            continue
        sub, sub_remap = pruned.graph.induced(comp)
        sub_back = {i: v for v, i in sub_remap.items()}
        coloring = tuple(pruned.coloring[v] for v in sorted(sub_remap))
        sub_set = {sub_remap[v] for v in pruned_set if v in sub_remap}
        outcome = _solve_connected(Instance(sub, coloring, inst.motif), sub_set)
        if outcome.is_yes:
            witness = [back[sub_back[v]] for v in outcome.witness]
            assert verify_solution(inst, witness)
            return SolveOutcome.yes(witness)
    return SolveOutcome.no()


def _restrict_deletion_set(inst: Instance, deletion_set: Set[int]) -> Set[int]:
    return {v for v in deletion_set if 0 <= v < inst.graph.n}


def _solve_connected(inst: Instance, s: Set[int]) -> SolveOutcome:
    g = inst.graph
    motif = inst.motif
    clique = [v for v in range(g.n) if v not in s]
    s_list = sorted(v for v in s if v < g.n)

    # Solution entirely inside the clique: any color-feasible pick works.
    picks = pick_by_colors(inst, motif.as_counter(), clique, set())
    if picks is not None:
        outcome = try_witness(inst, picks)
        if outcome is not None:
            return outcome

    # Per-vertex adjacency into S as a bitmask, for fast set construction.
    s_index = {v: i for i, v in enumerate(s_list)}
    nbr_mask = [0] * g.n
    for v in clique:
        for u in g.adjacency[v]:
            if u in s_index:
                nbr_mask[v] |= 1 << s_index[u]

    for size in range(1, len(s_list) + 1):
        if size > motif.total:
            break
        for s_prime in combinations(s_list, size):
            if not motif.contains(inst.coloring[v] for v in s_prime):
                continue
            outcome = _try_guess(inst, s_prime, clique, s_index, nbr_mask)
            if outcome is not None:
                return outcome
    return SolveOutcome.no()


def _try_guess(
    inst: Instance,
    s_prime: Tuple[int, ...],
    clique: List[int],
    s_index: Dict[int, int],
    nbr_mask: List[int],
) -> Optional[SolveOutcome]:
    motif = inst.motif
    remaining = motif.minus(inst.coloring[v] for v in s_prime)

    if not remaining:
        # S' would be the whole solution.
        return try_witness(inst, s_prime)

    comps = connected_components(inst.graph, s_prime)
    comp_masks = [
        sum(1 << s_index[v] for v in comp) for comp in comps
    ]

    # One ground element per component of G[S']; one set per clique vertex
    # whose color still has positive multiplicity, containing the components
    # it neighbors.  Deduplicate identical (color, coverage) sets: a copy
    # adds nothing to coverage and only burns threshold budget.
    seen: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    sets: List[Tuple[int, Tuple[int, ...]]] = []
    set_vertex: List[int] = []
    for v in clique:
        color = inst.coloring[v]
        if remaining[color] == 0:
            continue
        elems = tuple(
            j for j, mask in enumerate(comp_masks) if nbr_mask[v] & mask
        )
        key = (color, elems)
        if key in seen:
            continue
        seen[key] = v
        sets.append(key)
        set_vertex.append(v)

    sol = solve_csct(
        CsctInstance(len(comps), tuple(sets), dict(remaining))
    )
    if sol is None:
        return None
    chosen = [set_vertex[j] for j in sol.chosen]

    still_needed = Counter(remaining)
    still_needed.subtract(Counter(inst.coloring[v] for v in chosen))
    completion = pick_by_colors(
        inst, +still_needed, clique, set(chosen)
    )
    if completion is None:
        return None
    return try_witness(inst, list(s_prime) + chosen + completion)
