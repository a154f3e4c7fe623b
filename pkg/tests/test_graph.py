import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowlruc.errors import Disconnected, DuplicateEdge, SelfLoop, UnknownVertex
from rainbowlruc.generators import make_random_connected
from rainbowlruc.graph import Edge, Graph


def test_add_edge_basics():
    g = Graph()
    g.add_edge("a", "b")
    assert (g.n, g.m) == (2, 1)
    with pytest.raises(DuplicateEdge):
        g.add_edge("a", "b")
    with pytest.raises(DuplicateEdge):
        g.add_edge("b", "a")
    g.add_edge("b", "c")
    assert (g.n, g.m) == (3, 2)
    assert g.degree(g.index("b")) == 2


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        Graph([("a", "a")])


def test_indices_follow_first_appearance():
    g = Graph([("x", "y"), ("z", "y"), ("z", "w")])
    assert g.labels == ["x", "y", "z", "w"]
    assert [g.index(lab) for lab in g.labels] == [0, 1, 2, 3]
    assert g.edges[1] == Edge(1, 2)


def test_degree():
    path = Graph([("a", "b"), ("b", "c")])
    assert path.degree(path.index("b")) == 2
    star = Graph([(0, i) for i in range(1, 5)])
    assert star.degree(star.index(0)) == 4
    assert star.degree(star.index(3)) == 1
    with pytest.raises(UnknownVertex):
        star.degree(17)
    with pytest.raises(UnknownVertex):
        star.index("nope")


def test_adjacent_edge_count():
    assert Graph([(1, 2)]).adjacent_edge_count(2, 3) == 1
    assert Graph([(1, 2), (1, 3)]).adjacent_edge_count(1, 4) == 2
    assert Graph([(1, 2), (2, 3), (1, 3)]).adjacent_edge_count(1, 2) == 2
    with pytest.raises(UnknownVertex):
        Graph([(1, 2)]).adjacent_edge_count(3, 4)


def test_connectivity():
    assert Graph([(1, 2), (2, 3)]).is_connected()
    assert not Graph([(1, 2), (3, 4)]).is_connected()
    assert Graph([(1, 2)]).is_connected()
    assert Graph().is_connected()


def test_diameter():
    assert Graph([(1, 2), (2, 3), (3, 4)]).diameter() == 3
    assert Graph([(i, j) for i in range(5) for j in range(i + 1, 5)]).diameter() == 1
    assert Graph([(i, (i + 1) % 6) for i in range(6)]).diameter() == 3
    with pytest.raises(Disconnected):
        Graph([(1, 2), (3, 4)]).diameter()


graphs = st.builds(
    make_random_connected,
    n=st.integers(2, 8),
    extra=st.integers(0, 10),
    seed=st.integers(0, 10**6),
)


@given(graphs)
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


@given(graphs)
def test_adjacent_count_matches_enumeration(g):
    for a in range(g.n):
        for b in range(a + 1, g.n):
            shared = sum(
                1 for e in g.edges if e != Edge(a, b) and ({e.u, e.v} & {a, b})
            )
            la, lb = g.label(a), g.label(b)
            assert g.adjacent_edge_count(la, lb) == shared
            expected = g.degree(a) + g.degree(b) - 2 * g.has_edge(a, b)
            assert shared == expected


@settings(max_examples=50)
@given(graphs, st.randoms(use_true_random=False))
def test_diameter_relabel_invariant(g, rnd):
    labels = list(g.labels)
    shuffled = labels[:]
    rnd.shuffle(shuffled)
    h = g.relabel(dict(zip(labels, shuffled)))
    assert h.diameter() == g.diameter()


def test_adjacency_symmetric():
    g = make_random_connected(8, 6, seed=3)
    for a in range(g.n):
        for b in g.adjacency[a]:
            assert a in g.adjacency[b]
    assert len(set(g.edges)) == g.m
