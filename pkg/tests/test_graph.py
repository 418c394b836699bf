import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracgap import graph as G
from fracgap.errors import GraphFormatError, InputError

nx = pytest.importorskip("networkx")


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return G.Graph.from_edges(n, chosen)


class TestEdgeList:
    def test_triangle_with_header(self):
        g = G.parse_edge_list("n 3\n0 1\n1 2\n2 0")
        assert (g.n, g.m) == (3, 3)

    def test_duplicates_collapse(self):
        g = G.parse_edge_list("0 1\n0 1")
        assert (g.n, g.m) == (2, 1)
        assert G.parse_edge_list("0 1\n1 0").m == 1

    def test_comments_and_gaps(self):
        g = G.parse_edge_list("# a comment\n0 1  # trailing\n\n4 5\n")
        assert g.n == 6 and g.degrees[2] == 0

    @pytest.mark.parametrize("text", ["0 0", "n 3\n0 3", "-1 2", "0 x", "0 1 2"])
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            G.parse_edge_list(text)

    @given(graphs())
    def test_round_trip(self, g):
        assert G.parse_edge_list(G.emit_edge_list(g)) == g


class TestGraph6:
    def test_k5_fixture_matches_networkx(self):
        # frozen after checking against networkx's encoder
        expected = nx.to_graph6_bytes(nx.complete_graph(5), header=False).decode().strip()
        assert expected == "D~{"
        assert G.emit_graph6(G.complete(5)) == "D~{"
        assert G.parse_graph6("D~{") == G.complete(5)

    def test_single_edge(self):
        # n=2 -> 'A'; one bit '1' padded to 100000 = 32, +63 = '_'
        assert G.emit_graph6(G.Graph.from_edges(2, [(0, 1)])) == "A_"

    def test_header_accepted(self):
        assert G.parse_graph6(">>graph6<<A_").m == 1

    @pytest.mark.parametrize("text", ["", "D~", "D~{{", "D~\x20", "D\x7f{"])
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            G.parse_graph6(text)

    def test_size_cap(self):
        with pytest.raises(InputError):
            G.emit_graph6(G.cycle(63))
        with pytest.raises(GraphFormatError):
            G.parse_graph6("~?@~")

    @settings(max_examples=60)
    @given(graphs(max_n=20))
    def test_round_trip_and_networkx_agree(self, g):
        s = G.emit_graph6(g)
        assert G.parse_graph6(s) == g
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        assert nx.to_graph6_bytes(h, header=False).decode().strip() == s

    def test_autodetect(self):
        assert G.parse_graph(G.emit_graph6(G.petersen())) == G.petersen()
        assert G.parse_graph(G.emit_edge_list(G.petersen())) == G.petersen()


class TestGenerators:
    def test_line_graph_petersen(self):
        lg = G.line_graph(G.petersen())
        assert (lg.n, lg.m, G.is_regular(lg)) == (15, 30, 4)

    def test_blow_up_triangle_is_complete_tripartite(self):
        g = G.blow_up_odd_cycle(1, 2)
        assert (g.n, g.m, G.is_regular(g)) == (6, 12, 4)
        h = nx.Graph(list(g.edges))
        assert nx.is_isomorphic(h, nx.complete_multipartite_graph(2, 2, 2))

    def test_cycle4(self):
        g = G.cycle(4)
        assert (g.n, g.m) == (4, 4) and G.is_bipartite(g)

    def test_petersen_degrees_and_structure(self):
        g = G.petersen()
        assert G.is_regular(g) == 3
        h = nx.Graph(list(g.edges))
        assert nx.is_isomorphic(h, nx.petersen_graph())

    def test_hypercube(self):
        assert nx.is_isomorphic(nx.Graph(list(G.hypercube(3).edges)), nx.hypercube_graph(3))

    @pytest.mark.parametrize("call", [lambda: G.cycle(0), lambda: G.blow_up_odd_cycle(0, 2),
                                      lambda: G.complete_bipartite(2, -1), lambda: G.cycle(2)])
    def test_nonpositive(self, call):
        with pytest.raises(InputError):
            call()

    def test_line_graph_needs_edge(self):
        with pytest.raises(InputError):
            G.line_graph(G.Graph.from_edges(3, []))

    def test_generate_dispatch(self):
        assert G.generate("cycle", 5) == G.cycle(5)
        assert G.generate("blow-up", 2, 3) == G.blow_up_odd_cycle(2, 3)
        assert G.generate("line_graph", base=G.complete(4)) == G.line_graph(G.complete(4))
        with pytest.raises(InputError):
            G.generate("cycle")


@given(graphs())
def test_line_graph_edge_count(g):
    if g.m == 0:
        return
    lg = G.line_graph(g)
    assert lg.m == sum(comb(d, 2) for d in g.degrees)
    assert lg.n == g.m


@pytest.mark.parametrize("k,builder", [(3, G.petersen), (3, lambda: G.complete(4)), (3, lambda: G.hypercube(3))])
def test_line_graph_of_regular(k, builder):
    g = builder()
    assert G.is_regular(G.line_graph(g)) == 2 * k - 2


@pytest.mark.parametrize("h,k", [(1, 1), (1, 3), (2, 2), (3, 2)])
def test_blow_up_tensor_pattern(h, k):
    g = G.blow_up_odd_cycle(h, k)
    L = 2 * h + 1
    assert g.n == L * k and G.is_regular(g) == 2 * k
    for a, b in itertools.combinations(range(g.n), 2):
        u, v = a // k, b // k
        assert g.has_edge(a, b) == ((u - v) % L in (1, L - 1))


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_bipartite_iff_even(n):
    assert G.is_bipartite(G.cycle(n)) == (n % 2 == 0)


def test_predicates():
    c5 = G.cycle(5)
    assert G.is_regular(c5) == 2 and G.is_connected(c5) and not G.is_bipartite(c5)
    two = G.Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not G.is_connected(two) and not G.is_bipartite(two)
    squares = G.Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    assert G.is_bipartite(squares)
    assert G.is_regular(G.Graph.from_edges(3, [(0, 1)])) is None


@given(graphs())
def test_bipartite_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert G.is_bipartite(g) == nx.is_bipartite(h)
    assert G.is_connected(g) == nx.is_connected(h)
