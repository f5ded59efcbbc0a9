"""Vertex-colored graphs, motifs and the solution verifier.

All vertex ids are 0..n-1, colors are dense nonnegative integers.
Everything here is immutable after construction and safe to share.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class InputError(ValueError):
    """Malformed instance, witness, cover, or source-problem data."""


class CapacityError(RuntimeError):
    """Instance exceeds a hard size cap of an exact algorithm."""


class Graph:
    """Simple undirected graph with sorted, duplicate-free adjacency lists."""

    __slots__ = ("n", "adjacency", "_adj_sets")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        adj: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj_sets = adj
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def induced(self, vertices: Sequence[int]) -> Tuple["Graph", Dict[int, int]]:
        """Induced subgraph plus the old-id -> new-id map."""
        keep = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(keep)}
        edges = [
            (remap[u], remap[v])
            for u in keep
            for v in self._adj_sets[u]
            if v in remap and u < v
        ]
        return Graph(len(keep), edges), remap

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self._adj_sets[u]
        ]
        return Graph(self.n, edges)

    def is_clique(self, vertices: Sequence[int]) -> bool:
        vs = list(vertices)
        return all(
            self.has_edge(vs[i], vs[j])
            for i in range(len(vs))
            for j in range(i + 1, len(vs))
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


class Motif:
    """Multiset of colors with positive multiplicities."""

    __slots__ = ("multiplicities", "total")

    def __init__(self, multiplicities: Dict[int, int]):
        for color, mult in multiplicities.items():
            if color < 0:
                raise InputError(f"negative color id {color}")
            if mult < 1:
                raise InputError(f"multiplicity of color {color} must be >= 1")
        if not multiplicities:
            raise InputError("empty motif is not a valid input")
        self.multiplicities: Dict[int, int] = dict(multiplicities)
        self.total = sum(multiplicities.values())

    @classmethod
    def from_colors(cls, colors: Iterable[int]) -> "Motif":
        return cls(dict(Counter(colors)))

    def count(self, color: int) -> int:
        return self.multiplicities.get(color, 0)

    def colors(self) -> List[int]:
        return sorted(self.multiplicities)

    def contains(self, colors: Iterable[int]) -> bool:
        """True iff the given color multiset is a sub-multiset of this motif."""
        return all(
            cnt <= self.count(c) for c, cnt in Counter(colors).items()
        )

    def minus(self, colors: Iterable[int]) -> Counter:
        """Remaining multiplicities after removing a color multiset (clamped at 0)."""
        rem = Counter(self.multiplicities)
        rem.subtract(Counter(colors))
        return Counter({c: m for c, m in rem.items() if m > 0})

    def matches(self, colors: Iterable[int]) -> bool:
        return Counter(colors) == Counter(self.multiplicities)

    def as_counter(self) -> Counter:
        return Counter(self.multiplicities)

    def __eq__(self, other) -> bool:
        return isinstance(other, Motif) and self.multiplicities == other.multiplicities

    def __repr__(self) -> str:
        inner = ", ".join(f"{c}x{m}" for c, m in sorted(self.multiplicities.items()))
        return f"Motif({inner})"


@dataclass(frozen=True)
class Instance:
    """A graph, a vertex coloring, and a motif."""

    graph: Graph
    coloring: Tuple[int, ...]
    motif: Motif

    def __post_init__(self):
        if len(self.coloring) != self.graph.n:
            raise InputError(
                f"coloring has {len(self.coloring)} entries for {self.graph.n} vertices"
            )
        object.__setattr__(self, "coloring", tuple(self.coloring))

    def color(self, v: int) -> int:
        return self.coloring[v]


@dataclass(frozen=True)
class SolveOutcome:
    """Either No, or Yes with a sorted witness vertex set."""

    witness: Optional[Tuple[int, ...]] = None

    @classmethod
    def yes(cls, witness: Iterable[int]) -> "SolveOutcome":
        return cls(tuple(sorted(witness)))

    @classmethod
    def no(cls) -> "SolveOutcome":
        return cls(None)

    @property
    def is_yes(self) -> bool:
        return self.witness is not None

    def __bool__(self) -> bool:
        return self.is_yes


def verify_solution(inst: Instance, r: Iterable[int]) -> bool:
    """Check that r is nonempty, G[r] is connected, and c(r) equals the motif."""
    vertices = list(r)
    for v in vertices:
        if not (0 <= v < inst.graph.n):
            raise InputError(f"witness vertex {v} out of range")
    if len(set(vertices)) != len(vertices):
        return False
    if not vertices:
        return False
    if not inst.motif.matches(inst.coloring[v] for v in vertices):
        return False
    comps = connected_components(inst.graph, vertices)
    return len(comps) == 1


def connected_components(g: Graph, s: Iterable[int]) -> List[List[int]]:
    """Components of G[s], each sorted, ordered by smallest vertex id."""
    inside = set(s)
    for v in inside:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    seen: set = set()
    comps: List[List[int]] = []
    for start in sorted(inside):
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.adjacency[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def parse_instance(text: str) -> Instance:
    """Read the canonical line-oriented instance format.

    `p gm <n> <m>` header, then `e <u> <v>`, `c <v> <color>`, and
    `m <color> <mult>` lines; `#` starts a comment.  Sparse external color
    ids are re-mapped to dense 0-based ids.
    """
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []
    colors: Dict[int, int] = {}
    mults: Dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()

        def ints(count: int) -> List[int]:
            if len(fields) != count + 1:
                raise InputError(f"line {lineno}: expected {count} fields")
            try:
                return [int(f) for f in fields[1:]]
            except ValueError:
                raise InputError(f"line {lineno}: non-integer field") from None

        if fields[0] == "p":
            if header is not None:
                raise InputError(f"line {lineno}: duplicate header")
            if len(fields) != 4 or fields[1] != "gm":
                raise InputError(f"line {lineno}: header must be 'p gm <n> <m>'")
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise InputError(f"line {lineno}: non-integer header field") from None
        elif fields[0] == "e":
            u, v = ints(2)
            edges.append((u, v))
        elif fields[0] == "c":
            v, color = ints(2)
            if v in colors:
                raise InputError(f"line {lineno}: vertex {v} colored twice")
            if color < 0:
                raise InputError(f"line {lineno}: negative color")
            colors[v] = color
        elif fields[0] == "m":
            color, mult = ints(2)
            if color in mults:
                raise InputError(f"line {lineno}: motif color {color} repeated")
            if mult < 1:
                raise InputError(f"line {lineno}: multiplicity must be >= 1")
            mults[color] = mult
        else:
            raise InputError(f"line {lineno}: unknown record {fields[0]!r}")
    if header is None:
        raise InputError("missing 'p gm' header")
    n, m = header
    if sorted(colors) != list(range(n)):
        raise InputError("every vertex 0..n-1 needs exactly one 'c' line")
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, found {len(edges)}")
    dense = {c: i for i, c in enumerate(sorted(set(colors.values()) | set(mults)))}
    coloring = tuple(dense[colors[v]] for v in range(n))
    motif = Motif({dense[c]: mult for c, mult in mults.items()})
    return Instance(Graph(n, edges), coloring, motif)


def format_instance(inst: Instance, comment: str = "") -> str:
    """Serialize an instance in the canonical format."""
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    edges = inst.graph.edges()
    lines.append(f"p gm {inst.graph.n} {len(edges)}")
    lines.extend(f"e {u} {v}" for u, v in edges)
    lines.extend(f"c {v} {inst.coloring[v]}" for v in range(inst.graph.n))
    lines.extend(
        f"m {c} {mult}" for c, mult in sorted(inst.motif.multiplicities.items())
    )
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> List[int]:
    """Whitespace-separated vertex ids; `#` starts a comment."""
    ids = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        for field in line.split():
            try:
                ids.append(int(field))
            except ValueError:
                raise InputError(f"bad witness token {field!r}") from None
    return ids


def format_witness(vertices: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(vertices)) + "\n"


def prune_wrong_colors(inst: Instance) -> Tuple[Instance, Dict[int, int]]:
    """Drop vertices whose color has zero multiplicity in the motif.

    Returns the restricted instance and the old-id -> new-id map.  The motif
    is unchanged; the answer never changes either, since off-color vertices
    cannot be part of any solution.
    """
    keep = [v for v in range(inst.graph.n) if inst.motif.count(inst.coloring[v]) > 0]
    sub, remap = inst.graph.induced(keep)
    coloring = tuple(inst.coloring[v] for v in keep)
    return Instance(sub, coloring, inst.motif), remap
