"""Enumeration and matching primitives shared by the solvers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from .core import InputError


def iter_subsets(items: Sequence) -> Iterator[List]:
    """All 2^n subsets of items, empty set first, in binary-counter order."""
    items = list(items)
    n = len(items)
    for mask in range(1 << n):
        yield [items[i] for i in range(n) if mask >> i & 1]


def iter_set_partitions(items: Sequence, parts: int | None = None) -> Iterator[List[List]]:
    """Set partitions of items via restricted-growth strings.

    If parts is given, only partitions into exactly that many blocks are
    yielded.  Blocks are ordered by their smallest element.
    """
    items = list(items)
    n = len(items)
    if n == 0:
        if parts in (None, 0):
            yield []
        return

    # rgs[i] = block index of items[i]; rgs[i] <= max(rgs[:i]) + 1
    def rec(i: int, rgs: List[int], nblocks: int):
        if i == n:
            if parts is None or nblocks == parts:
                blocks: List[List] = [[] for _ in range(nblocks)]
                for j, b in enumerate(rgs):
                    blocks[b].append(items[j])
                yield blocks
            return
        for b in range(nblocks):
            rgs.append(b)
            yield from rec(i + 1, rgs, nblocks)
            rgs.pop()
        rgs.append(nblocks)
        yield from rec(i + 1, rgs, nblocks + 1)
        rgs.pop()

    yield from rec(0, [], 0)


def iter_ordered_partitions(items: Sequence, parts: int) -> Iterator[List[List]]:
    """All ordered partitions of items into exactly `parts` nonempty blocks.

    Every surjective assignment appears exactly once: l! * S(n, l) results.
    """
    n = len(items)
    if not (1 <= parts <= n):
        raise InputError(f"parts={parts} out of range for {n} items")
    for blocks in iter_set_partitions(items, parts):
        for order in permutations(range(parts)):
            yield [blocks[i] for i in order]


def iter_labeled_trees(k: int) -> Iterator[Set[Tuple[int, int]]]:
    """All k^(k-2) labeled trees on nodes 0..k-1, via Pruefer decoding."""
    if k < 1:
        raise InputError("need at least one node")
    if k == 1:
        yield set()
        return
    if k == 2:
        yield {(0, 1)}
        return

    def decode(seq: Tuple[int, ...]) -> Set[Tuple[int, int]]:
        degree = [1] * k
        for x in seq:
            degree[x] += 1
        edges: Set[Tuple[int, int]] = set()
        for x in seq:
            for v in range(k):
                if degree[v] == 1:
                    edges.add((min(v, x), max(v, x)))
                    degree[v] -= 1
                    degree[x] -= 1
                    break
        u, v = [v for v in range(k) if degree[v] == 1]
        edges.add((u, v))
        return edges

    def seqs(length: int) -> Iterator[Tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for rest in seqs(length - 1):
            for x in range(k):
                yield rest + (x,)

    for seq in seqs(k - 2):
        yield decode(seq)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph given by side sizes and an explicit edge list."""

    left: int
    right: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.left and 0 <= v < self.right):
                raise InputError(f"edge ({u},{v}) out of range")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        object.__setattr__(self, "edges", tuple(self.edges))


@dataclass(frozen=True)
class MatchingResult:
    """A maximum matching plus a minimum vertex cover of the same size."""

    matching: Tuple[Tuple[int, int], ...]
    cover_left: Tuple[int, ...]
    cover_right: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.matching)


def max_matching_with_cover(b: BipartiteGraph) -> MatchingResult:
    """Maximum matching by augmenting paths; cover via Koenig's theorem.

    The cover is (unreached left) union (reached right), computed from the
    alternating-reachability sets of the final matching.
    """
    adj: List[List[int]] = [[] for _ in range(b.left)]
    for u, v in b.edges:
        adj[u].append(v)
    for lst in adj:
        lst.sort()

    match_l: List[int | None] = [None] * b.left
    match_r: List[int | None] = [None] * b.right

    def augment(u: int, seen: List[bool]) -> bool:
        for v in adj[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_r[v] is None or augment(match_r[v], seen):
                match_l[u] = v
                match_r[v] = u
                return True
        return False

    for u in range(b.left):
        augment(u, [False] * b.right)

    # Alternating reachability from unmatched left vertices.
    reach_l = [match_l[u] is None for u in range(b.left)]
    reach_r = [False] * b.right
    frontier = [u for u in range(b.left) if reach_l[u]]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if not reach_r[v]:
                    reach_r[v] = True
                    w = match_r[v]
                    if w is not None and not reach_l[w]:
                        reach_l[w] = True
                        nxt.append(w)
        frontier = nxt

    matching = tuple(
        (u, match_l[u]) for u in range(b.left) if match_l[u] is not None
    )
    cover_left = tuple(u for u in range(b.left) if not reach_l[u])
    cover_right = tuple(v for v in range(b.right) if reach_r[v])
    return MatchingResult(matching, cover_left, cover_right)
