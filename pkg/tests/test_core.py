import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motifkit.core import (
    Graph,
    InputError,
    Instance,
    Motif,
    connected_components,
    format_instance,
    format_witness,
    parse_instance,
    parse_witness,
    prune_wrong_colors,
    verify_solution,
)
from motifkit.generators import X3cInstance, gen_x3c_paths


def graphs(max_n=10):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph(n, edges)

    return build()


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(InputError):
            Graph(2, [(0, 0)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(InputError):
            Graph(2, [(0, 2)])

    def test_adjacency_sorted_and_deduplicated(self):
        g = Graph(3, [(2, 0), (0, 2), (0, 1)])
        assert g.adjacency[0] == (1, 2)
        assert g.num_edges() == 2

    @given(graphs())
    def test_complement_is_involution(self, g):
        assert g.complement().complement() == g

    @given(graphs())
    def test_induced_on_everything_is_identity(self, g):
        sub, remap = g.induced(range(g.n))
        assert sub == g
        assert remap == {v: v for v in range(g.n)}

    def test_induced_remaps_edges(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        sub, remap = g.induced([1, 3])
        assert sub.n == 2 and sub.num_edges() == 0
        assert remap == {1: 0, 3: 1}


class TestMotif:
    def test_rejects_empty(self):
        with pytest.raises(InputError):
            Motif({})

    def test_rejects_zero_multiplicity(self):
        with pytest.raises(InputError):
            Motif({1: 0})

    def test_contains_and_minus(self):
        m = Motif({1: 2, 2: 1})
        assert m.contains([1, 1])
        assert not m.contains([2, 2])
        assert m.minus([1]) == {1: 1, 2: 1}

    def test_matches_needs_exact_multiplicities(self):
        m = Motif({1: 2})
        assert m.matches([1, 1])
        assert not m.matches([1])
        assert not m.matches([1, 1, 1])


class TestVerifySolution:
    def test_single_vertex_identity(self):
        inst = Instance(Graph(1), (1,), Motif({1: 1}))
        assert verify_solution(inst, [0])

    def test_disconnected_pair_rejected(self):
        inst = Instance(Graph(2), (1, 1), Motif({1: 2}))
        assert not verify_solution(inst, [0, 1])

    def test_duplicate_ids_rejected(self):
        inst = Instance(Graph(2, [(0, 1)]), (1, 1), Motif({1: 2}))
        assert not verify_solution(inst, [0, 0])

    def test_out_of_range_raises(self):
        inst = Instance(Graph(1), (1,), Motif({1: 1}))
        with pytest.raises(InputError):
            verify_solution(inst, [5])

    def test_pictured_exact_cover_instance(self):
        # Known YES source: sets 0 and 2 cover the six elements exactly.
        source = X3cInstance(2, ((0, 2, 4), (0, 1, 3), (1, 3, 5), (1, 4, 5)))
        generated = gen_x3c_paths(source)
        inst = generated.instance
        cert = generated.certificate
        witness = {cert["root"]}
        for chosen in (0, 2):
            head = cert[f"set:{chosen}:long"]
            witness.update(range(head, head + 5))
        for rejected in (1, 3):
            head = cert[f"set:{rejected}:short"]
            witness.update((head, head + 1))
        assert verify_solution(inst, witness)


class TestConnectedComponents:
    def test_empty_selection(self):
        assert connected_components(Graph(3), []) == []

    def test_path_with_gap(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert connected_components(g, [0, 2]) == [[0], [2]]

    def test_triangle_whole(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert connected_components(g, range(3)) == [[0, 1, 2]]


class TestPruneWrongColors:
    def test_keeps_on_color_vertices(self):
        inst = Instance(Graph(3, [(0, 1), (1, 2)]), (1, 2, 1), Motif({1: 2}))
        pruned, remap = prune_wrong_colors(inst)
        assert pruned.graph.n == 2
        assert sorted(remap) == [0, 2]
        assert pruned.motif == inst.motif

    def test_all_off_color(self):
        inst = Instance(Graph(2, [(0, 1)]), (5, 5), Motif({1: 1}))
        pruned, _ = prune_wrong_colors(inst)
        assert pruned.graph.n == 0


class TestFileFormat:
    def test_round_trip(self):
        inst = Instance(
            Graph(3, [(0, 1), (1, 2)]), (0, 1, 0), Motif({0: 2, 1: 1})
        )
        again = parse_instance(format_instance(inst, comment="round trip"))
        assert again.graph == inst.graph
        assert again.coloring == inst.coloring
        assert again.motif == inst.motif

    def test_sparse_colors_are_remapped(self):
        text = "p gm 2 1\ne 0 1\nc 0 10\nc 1 99\nm 10 1\nm 99 1\n"
        inst = parse_instance(text)
        assert inst.coloring == (0, 1)
        assert inst.motif == Motif({0: 1, 1: 1})

    def test_comments_and_blank_lines_ignored(self):
        text = "# hello\n\np gm 1 0  # trailing\nc 0 0\nm 0 1\n"
        inst = parse_instance(text)
        assert inst.graph.n == 1

    @pytest.mark.parametrize(
        "text",
        [
            "c 0 0\nm 0 1\n",  # missing header
            "p gm 1 0\nm 0 1\n",  # vertex never colored
            "p gm 1 0\nc 0 0\nc 0 1\nm 0 1\n",  # colored twice
            "p gm 2 1\nc 0 0\nc 1 0\nm 0 1\n",  # edge count off
            "p gm 1 0\nc 0 0\nm 0 0\n",  # zero multiplicity
            "p gm 1 0\nc 0 0\nm 0 1\nq 3\n",  # unknown record
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(InputError):
            parse_instance(text)

    def test_witness_round_trip(self):
        assert parse_witness(format_witness([3, 1, 2])) == [1, 2, 3]
        assert parse_witness("1 2 # comment\n3") == [1, 2, 3]
        with pytest.raises(InputError):
            parse_witness("1 x")
