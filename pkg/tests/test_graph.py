import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from permgi import (
    Graph,
    GraphFormatError,
    encode_graph6,
    format_edge_list,
    is_connected,
    is_tree,
    parse_edge_list,
    parse_graph6,
)

from .conftest import G1_ADJ, all_labeled_graphs, complete_graph, path_graph


def nx_graph6(g: Graph) -> bytes:
    # independent encoder
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).strip()


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


class TestGraph6:
    def test_single_vertex(self):
        g = parse_graph6(b"@")
        assert g.n == 1 and g.edges() == []

    def test_k2(self):
        g = parse_graph6(b"A_")
        assert g.n == 2 and g.edges() == [(0, 1)]

    def test_two_isolated(self):
        g = parse_graph6(b"A?")
        assert g.n == 2 and g.edges() == []

    def test_labels_are_zero_based(self):
        assert parse_graph6("A_").labels == ("0", "1")

    def test_encode(self):
        assert encode_graph6(Graph.from_edges(2, [(0, 1)])) == b"A_"
        assert encode_graph6(Graph.from_edges(1, [])) == b"@"

    @pytest.mark.parametrize("n", range(6))
    def test_round_trip_exhaustive(self, n):
        for g in all_labeled_graphs(n):
            b = encode_graph6(g)
            assert parse_graph6(b) == g
            assert b == nx_graph6(g)

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_graph6(encode_graph6(g)) == g

    def test_accepts_header_and_newline(self):
        assert parse_graph6(b">>graph6<<A_\n").edges() == [(0, 1)]

    @pytest.mark.parametrize(
        "data, where",
        [
            (b"A\x20", "byte 1"),
            (b"B", "byte 1"),
            (b"A__", "byte 2"),
            (b"~??", "byte 0"),
        ],
    )
    def test_errors(self, data, where):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph6(data)
        assert exc.value.where == where

    def test_encode_rejects_large(self):
        with pytest.raises(ValueError):
            encode_graph6(path_graph(63))


class TestEdgeList:
    def test_g1(self, g1):
        assert g1.n == 7
        assert g1.degrees() == [1, 3, 2, 4, 1, 2, 1]
        for v, nbrs in G1_ADJ.items():
            assert [int(g1.labels[u]) for u in g1.adjacency[v - 1]] == nbrs

    def test_single_vertex(self):
        g = parse_edge_list("1\n")
        assert g.n == 1 and g.labels == ("1",)

    def test_named_vertices(self, g2):
        assert g2.labels == tuple("ABCDEFG")
        assert g2.degree(g2.labels.index("D")) == 4

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# c\n\n3  # three\n1 2\n\n2 3 # edge\n")
        assert g.edges() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("3\n3 3\n", "self-loop"),
            ("3\n1 2\n2 1\n", "duplicate edge"),
            ("3\n1 4\n", "out of range"),
            ("3\n1 2 3\n", "expected 'u v'"),
            ("x\n", "vertex count"),
            ("# nothing\n", "missing"),
            ("2 a\n", "vertex names"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(GraphFormatError, match=fragment):
            parse_edge_list(text)

    def test_error_names_line(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_edge_list("3\n1 2\n3 3\n")
        assert exc.value.where == "line 3"

    @given(graphs())
    def test_format_round_trip(self, g):
        h = parse_edge_list(format_edge_list(g))
        assert h.edges() == g.edges()


class TestConstructionInvariants:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            Graph(2, ((1,), ()))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])

    @given(graphs())
    def test_symmetric_and_loop_free(self, g):
        for v in range(g.n):
            assert v not in g.adjacency[v]
            for u in g.adjacency[v]:
                assert v in g.adjacency[u]
        assert sum(g.degrees()) == 2 * g.edge_count

    @given(graphs(), st.randoms(use_true_random=False))
    def test_degree_multiset_relabel_invariant(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = g.relabel(perm)
        assert sorted(h.degrees()) == sorted(g.degrees())
        # permute-then-parse equals parse-then-permute
        assert parse_graph6(encode_graph6(h)) == parse_graph6(encode_graph6(g)).relabel(perm)
        assert all(h.degree(perm[v]) == g.degree(v) for v in range(g.n))


class TestConnectivity:
    def test_g1(self, g1):
        assert is_connected(g1)
        assert not is_tree(g1)

    def test_trivial(self):
        assert is_connected(Graph.from_edges(0, []))
        assert is_connected(Graph.from_edges(1, []))
        assert not is_connected(Graph.from_edges(2, []))

    def test_trees(self, p4):
        assert is_tree(p4)
        assert not is_tree(complete_graph(3))
        # forest with n-1 edges is not a tree
        assert not is_tree(Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]))

    @settings(max_examples=200)
    @given(graphs())
    def test_against_networkx(self, g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        if g.n:
            assert is_connected(g) == nx.is_connected(h)
            assert is_tree(g) == nx.is_tree(h)
