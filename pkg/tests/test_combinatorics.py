import math
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motifkit.combinatorics import (
    BipartiteGraph,
    iter_labeled_trees,
    iter_ordered_partitions,
    iter_set_partitions,
    iter_subsets,
    max_matching_with_cover,
)
from motifkit.core import InputError


def stirling2(n, k):
    if k == 0:
        return 1 if n == 0 else 0
    return sum(
        (-1) ** i * math.comb(k, i) * (k - i) ** n for i in range(k + 1)
    ) // math.factorial(k)


class TestSubsets:
    def test_two_items(self):
        assert list(iter_subsets(["a", "b"])) == [[], ["a"], ["b"], ["a", "b"]]

    def test_empty(self):
        assert list(iter_subsets([])) == [[]]

    @given(st.integers(0, 8))
    def test_count(self, n):
        assert sum(1 for _ in iter_subsets(range(n))) == 2**n


class TestOrderedPartitions:
    @pytest.mark.parametrize(
        "n,l,count", [(2, 2, 2), (3, 2, 6), (1, 1, 1), (4, 3, 36)]
    )
    def test_counts(self, n, l, count):
        parts = list(iter_ordered_partitions(list(range(n)), l))
        assert len(parts) == count
        assert count == math.factorial(l) * stirling2(n, l)

    def test_blocks_are_nonempty_and_partition(self):
        for parts in iter_ordered_partitions([0, 1, 2, 3], 2):
            assert all(parts)
            assert sorted(x for block in parts for x in block) == [0, 1, 2, 3]

    def test_all_distinct(self):
        parts = list(iter_ordered_partitions([0, 1, 2], 2))
        assert len({tuple(tuple(b) for b in p) for p in parts}) == len(parts)

    def test_rejects_bad_part_count(self):
        with pytest.raises(InputError):
            list(iter_ordered_partitions([0], 2))


class TestSetPartitions:
    @pytest.mark.parametrize("n,bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_bell_numbers(self, n, bell):
        assert sum(1 for _ in iter_set_partitions(list(range(n)))) == bell

    def test_fixed_part_count(self):
        assert sum(1 for _ in iter_set_partitions([0, 1, 2, 3], 2)) == stirling2(4, 2)


class TestLabeledTrees:
    @pytest.mark.parametrize("k,count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)])
    def test_cayley_counts(self, k, count):
        trees = list(iter_labeled_trees(k))
        assert len(trees) == count
        assert len({frozenset(t) for t in trees}) == count

    @given(st.integers(1, 6))
    def test_every_output_is_a_tree(self, k):
        for edges in iter_labeled_trees(k):
            assert len(edges) == k - 1
            parent = list(range(k))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u, v in edges:
                ru, rv = find(u), find(v)
                assert ru != rv  # acyclic
                parent[ru] = rv


def exhaustive_max_matching(b: BipartiteGraph) -> int:
    edges = list(b.edges)
    best = 0
    for r in range(len(edges), -1, -1):
        if r <= best:
            break
        from itertools import combinations

        for chosen in combinations(edges, r):
            lefts = [u for u, _ in chosen]
            rights = [v for _, v in chosen]
            if len(set(lefts)) == r and len(set(rights)) == r:
                best = max(best, r)
                break
    return best


@st.composite
def bipartite_graphs(draw, max_side=5):
    nl = draw(st.integers(0, max_side))
    nr = draw(st.integers(0, max_side))
    pairs = [(u, v) for u in range(nl) for v in range(nr)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return BipartiteGraph(nl, nr, edges)


class TestMatching:
    def test_complete_2x2(self):
        b = BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
        assert max_matching_with_cover(b).size == 2

    def test_edgeless(self):
        result = max_matching_with_cover(BipartiteGraph(3, 3, []))
        assert result.size == 0
        assert not result.cover_left and not result.cover_right

    @given(bipartite_graphs())
    @settings(max_examples=150, deadline=None)
    def test_matches_exhaustive_and_konig(self, b):
        result = max_matching_with_cover(b)
        assert result.size == exhaustive_max_matching(b)
        # cover touches every edge, and has König-equality size
        for u, v in b.edges:
            assert u in result.cover_left or v in result.cover_right
        assert len(result.cover_left) + len(result.cover_right) == result.size
