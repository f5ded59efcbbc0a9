"""XP solver for graphs that are few paths plus few high-degree vertices.

Vertices of degree at least 3 form a small set S; the rest decomposes into
paths whose interiors have no neighbors outside the path.  A solution
intersects each path in a prefix, a suffix, both, or (only when it avoids S
entirely) one inner window, so a count-and-connectivity dynamic program over
the paths decides the instance.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from ..core import Instance, InputError, Motif, SolveOutcome, connected_components
from ..estimators import PathComponent, degree3_decomposition
from .common import dispatch_components, try_witness
from .paths import solve_on_path


@dataclass(frozen=True)
class StarWordProblem:
    """Find prefixes of the words whose combined color counts hit the target."""

    target: Motif
    words: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.words:
            raise InputError("need at least one word")
        object.__setattr__(
            self, "words", tuple(tuple(w) for w in self.words)
        )


def solve_star_words(problem: StarWordProblem) -> Optional[List[int]]:
    """Prefix lengths (one per word) realizing the target counts, or None."""
    target = problem.target.as_counter()

    def key(counter: Counter) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(counter.items()))

    states: Dict[Tuple[Tuple[int, int], ...], List[int]] = {(): []}
    for word in problem.words:
        nxt: Dict[Tuple[Tuple[int, int], ...], List[int]] = {}
        for state, lens in states.items():
            running = Counter(dict(state))
            for take in range(len(word) + 1):
                if take > 0:
                    c = word[take - 1]
                    running[c] += 1
                    if running[c] > target[c]:
                        break
                k = key(running)
                if k not in nxt:
                    nxt[k] = lens + [take]
        states = nxt
    return states.get(key(target))


def solve_max_leaf_xp(inst: Instance) -> SolveOutcome:
    """Exact answer; exponential only in the number of degree-3 vertices."""
    return dispatch_components(inst, _solve_connected)


def _solve_connected(inst: Instance) -> SolveOutcome:
    g = inst.graph
    if g.n == 1:
        return (
            SolveOutcome.yes([0])
            if inst.motif.matches([inst.coloring[0]])
            else SolveOutcome.no()
        )
    if g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)):
        return _solve_cycle(inst)
    s, paths = degree3_decomposition(g)
    s_list = sorted(s)

    # T = solution's trace on S; T empty means the solution sits inside one
    # path, which is plain window matching.
    for path in paths:
        word = [inst.coloring[v] for v in path.vertices]
        window = solve_on_path(word, inst.motif)
        if window is not None:
            i, j = window
            return SolveOutcome.yes(path.vertices[i : j + 1])

    for size in range(1, len(s_list) + 1):
        if size > inst.motif.total:
            break
        for t in combinations(s_list, size):
            if not inst.motif.contains(inst.coloring[v] for v in t):
                continue
            outcome = _try_trace(inst, set(t), paths)
            if outcome is not None:
                return outcome
    return SolveOutcome.no()


def _solve_cycle(inst: Instance) -> SolveOutcome:
    g = inst.graph
    order = [0, g.adjacency[0][0]]
    while len(order) < g.n:
        cur, prev = order[-1], order[-2]
        order.append(next(u for u in g.adjacency[cur] if u != prev))
    total = inst.motif.total
    if total > g.n:
        return SolveOutcome.no()
    if total == g.n:
        return (
            SolveOutcome.yes(order)
            if inst.motif.matches(inst.coloring)
            else SolveOutcome.no()
        )
    doubled = order + order
    target = inst.motif.as_counter()
    for start in range(g.n):
        segment = doubled[start : start + total]
        if Counter(inst.coloring[v] for v in segment) == target:
            return SolveOutcome.yes(segment)
    return SolveOutcome.no()


def _path_options(
    inst: Instance,
    path: PathComponent,
    t_set: Set[int],
    comp_of: Dict[int, int],
    remaining: Counter,
) -> List[Tuple[List[int], Set[int]]]:
    """Admissible intersections of a solution with one path.

    Every taken segment must touch the trace through a path end, since inner
    vertices have no neighbors outside the path.
    """
    verts = path.vertices
    n = len(verts)
    first_t = {comp_of[u] for u in path.first_attach if u in t_set}
    last_t = {comp_of[u] for u in path.last_attach if u in t_set}
    options: List[Tuple[List[int], Set[int]]] = [([], set())]

    def feasible(vs: List[int]) -> bool:
        counts = Counter(inst.coloring[v] for v in vs)
        return all(counts[c] <= remaining[c] for c in counts)

    if first_t:
        for a in range(1, n + 1):
            seg = list(verts[:a])
            if not feasible(seg):
                break
            touched = set(first_t) | (last_t if a == n else set())
            options.append((seg, touched))
    if last_t:
        for b in range(1, n + 1):
            seg = list(verts[n - b :])
            if not feasible(seg):
                break
            touched = set(last_t) | (first_t if b == n else set())
            options.append((seg, touched))
    if first_t and last_t:
        # Disjoint prefix + suffix with a gap of at least one vertex.
        for a in range(1, n - 1):
            prefix = list(verts[:a])
            if not feasible(prefix):
                break
            for b in range(1, n - a):
                both = prefix + list(verts[n - b :])
                if not feasible(both):
                    break
                options.append((both, first_t | last_t))
    return options


def _try_trace(
    inst: Instance, t_set: Set[int], paths: List[PathComponent]
) -> Optional[SolveOutcome]:
    g = inst.graph
    motif = inst.motif
    remaining = motif.minus(inst.coloring[v] for v in t_set)
    comps = connected_components(g, t_set)
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    n_comps = len(comps)

    color_order = sorted(remaining)
    color_index = {c: i for i, c in enumerate(color_order)}
    target = tuple(remaining[c] for c in color_order)

    def canon(partition: Tuple[int, ...]) -> Tuple[int, ...]:
        seen: Dict[int, int] = {}
        out = []
        for p in partition:
            if p not in seen:
                seen[p] = len(seen)
            out.append(seen[p])
        return tuple(out)

    def merge(partition: Tuple[int, ...], touched: Set[int]) -> Tuple[int, ...]:
        if len(touched) <= 1:
            return partition
        roots = {partition[i] for i in touched}
        new_root = min(roots)
        return canon(
            tuple(new_root if p in roots else p for p in partition)
        )

    State = Tuple[Tuple[int, ...], Tuple[int, ...]]
    start: State = (tuple([0] * len(color_order)), tuple(range(n_comps)))
    states: Dict[State, List[int]] = {start: []}

    for path in paths:
        options = _path_options(inst, path, t_set, comp_of, remaining)
        nxt: Dict[State, List[int]] = {}
        for (counts, partition), chosen in states.items():
            for seg, touched in options:
                if seg:
                    new_counts = list(counts)
                    ok = True
                    for v in seg:
                        idx = color_index[inst.coloring[v]]
                        new_counts[idx] += 1
                        if new_counts[idx] > target[idx]:
                            ok = False
                            break
                    if not ok:
                        continue
                    key = (tuple(new_counts), merge(partition, touched))
                else:
                    key = (counts, partition)
                if key not in nxt:
                    nxt[key] = chosen + seg
        states = nxt

    goal: State = (target, tuple([0] * n_comps))
    final = states.get(goal)
    if final is None:
        return None
    return try_witness(inst, sorted(t_set) + final)
