import random

import pytest
from hypothesis import given, settings, strategies as st

from platykit.constructions import generalized_petersen, petersen_prism
from platykit.graph import (
    EdgeMultiset,
    Graph,
    GraphError,
    HamWitness,
    delete_vertex,
    from_edge_list,
    suppress_degree_two,
)


def test_from_edge_list_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g.num_edges() == 3
    assert g.degrees() == (2, 2, 2)


def test_from_edge_list_petersen(petersen):
    g = from_edge_list(10, list(petersen.edges()))
    assert g == petersen
    assert g.num_edges() == 15


def test_from_edge_list_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 5)])
    with pytest.raises(GraphError):
        from_edge_list(0, [])
    with pytest.raises(GraphError):
        from_edge_list(300, [])


def test_graph_is_immutable(k4):
    with pytest.raises(AttributeError):
        k4.n = 5


def test_delete_vertex_complete(k4):
    g = delete_vertex(k4, 0)
    assert g.n == 3 and g.num_edges() == 3


def test_delete_vertex_cycle(c5):
    g = delete_vertex(c5, 2)
    assert sorted(g.degrees()) == [1, 1, 2, 2]
    assert g.num_edges() == 3


def test_delete_vertex_petersen_degrees(petersen):
    g = delete_vertex(petersen, 0)
    assert sorted(g.degrees()) == [2, 2, 2, 3, 3, 3, 3, 3, 3]


def test_delete_vertex_errors(k4):
    with pytest.raises(GraphError):
        delete_vertex(k4, 4)
    with pytest.raises(GraphError):
        delete_vertex(Graph(1, [0]), 0)


@given(st.integers(2, 16), st.randoms())
@settings(max_examples=60, deadline=None)
def test_delete_vertex_never_increases_degree(n, rnd):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < 0.4]
    g = from_edge_list(n, edges)
    v = rnd.randrange(n)
    h = delete_vertex(g, v)
    for u in range(n):
        if u == v:
            continue
        nu = u if u < v else u - 1
        assert h.degree(nu) <= g.degree(u)


@given(st.integers(1, 20), st.randoms())
@settings(max_examples=60, deadline=None)
def test_handshake(n, rnd):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < 0.3]
    g = from_edge_list(n, edges)
    assert sum(g.degrees()) == 2 * g.num_edges()


def test_suppress_petersen_fixed_point(petersen):
    em = suppress_degree_two(petersen)
    assert em.n == 10
    assert sorted(em.edges) == sorted(petersen.edges())


def test_suppress_pp71_gives_prism():
    pp = petersen_prism(7, 1)
    em = suppress_degree_two(pp)
    gp = generalized_petersen(7, 1)  # the prism C7 x K2
    assert em.n == 14
    assert em.num_edges() == 21
    assert sorted(em.edges) == sorted(gp.edges())


def test_suppress_cycle_rejected(c5):
    with pytest.raises(GraphError):
        suppress_degree_two(c5)


def test_suppress_loop_production():
    # cycle with one pendant: the cycle collapses to a loop at the anchor
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)])
    em = suppress_degree_two(g)
    assert em.n == 2
    assert (0, 0) in em.edges
    assert em.degree(0) == 3  # loop counts twice plus the pendant edge


def test_suppress_parallel_edges():
    # theta graph: two degree-3 anchors joined by three chains
    g = from_edge_list(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    em = suppress_degree_two(g)
    assert em.n == 2
    assert list(em.edges) == [(0, 1), (0, 1), (0, 1)]


def test_suppress_anchor_degree_property():
    # whenever every vertex has <= 1 degree-2 neighbour and min degree >= 2,
    # anchors keep degree >= 3
    rng = random.Random(5)
    checked = 0
    for _ in range(300):
        n = rng.randint(4, 12)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45]
        try:
            g = from_edge_list(n, edges)
        except GraphError:
            continue
        deg = g.degrees()
        if min(deg) < 2 or max(deg) < 3:
            continue
        deg2 = [v for v in range(n) if deg[v] == 2]
        if any(sum(1 for u in g.neighbors(v) if deg[u] == 2) > 1 for v in range(n)):
            continue
        em = suppress_degree_two(g)
        assert min(em.degree(v) for v in range(em.n)) >= 3
        checked += 1
    assert checked > 10


def test_edge_multiset_validation():
    with pytest.raises(GraphError):
        EdgeMultiset(2, ((0, 2),))


def test_ham_witness_validation(c5, k4):
    assert HamWitness("cycle", (0, 1, 2, 3, 4)).is_valid_for(c5)
    assert not HamWitness("cycle", (0, 1, 3, 2, 4)).is_valid_for(c5)
    assert not HamWitness("cycle", (0, 1, 2, 3)).is_valid_for(c5)
    assert HamWitness("path", (0, 1, 2, 3)).is_valid_for(
        from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    )


def test_words_wide_roundtrip():
    g = petersen_prism(31, 7)  # 124 vertices
    w = g.words()
    assert w.shape == (124, 2)
    back = [int(w[i, 0]) | int(w[i, 1]) << 64 for i in range(124)]
    assert tuple(back) == g.rows
