import pickle
import random

import pytest
from hypothesis import given, settings

from p5free import catalog
from p5free.graph import (
    Graph,
    GraphError,
    anticomponent_masks,
    complement,
    component_masks,
    empty_graph,
    graph_from_edges,
    induced_subgraph,
    is_anticonnected,
    is_connected,
    relabel,
    spanning_tree,
    substitute,
)

from .conftest import graphs


def test_from_edges_collapses_duplicates():
    g = graph_from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.num_edges() == 2
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("edges, msg", [([(0, 0)], "self-loop"), ([(0, 5)], "(0, 5)"), ([(-1, 2)], "(-1, 2)")])
def test_from_edges_rejects_bad_pairs(edges, msg):
    with pytest.raises(GraphError, match=msg.replace("(", r"\(").replace(")", r"\)")):
        graph_from_edges(3, edges)


def test_constructor_validates():
    with pytest.raises(GraphError, match="asymmetric"):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphError, match="self-loop"):
        Graph(1, [1])
    with pytest.raises(GraphError):
        Graph(2, [0])


def test_immutable_and_hashable():
    g = catalog.P4()
    with pytest.raises(AttributeError):
        g.n = 3
    assert len({g, graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])}) == 1
    assert pickle.loads(pickle.dumps(g)) == g


def test_empty_and_trivial_graphs():
    k0 = empty_graph(0)
    assert k0.n == 0 and k0.edges() == []
    assert complement(k0) == k0
    with pytest.raises(GraphError):
        is_connected(k0)
    k1 = empty_graph(1)
    assert is_connected(k1) and is_anticonnected(k1)


def test_complement_counts():
    g = catalog.P5()
    gc = complement(g)
    assert g.num_edges() + gc.num_edges() == 10
    assert all(g.has_edge(u, v) != gc.has_edge(u, v) for u in range(5) for v in range(5) if u != v)


def test_double_complement_seeded():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(0, 32)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = graph_from_edges(n, edges)
        assert complement(complement(g)) == g


@given(graphs(max_n=12))
def test_constructors_keep_adjacency_symmetric(g):
    for h in (complement(g), induced_subgraph(g, range(0, g.n, 2))[0], relabel(g, list(reversed(range(g.n))))):
        h.validate()


def test_components_and_anticomponents():
    two_k2 = catalog.TWO_K2()
    assert len(component_masks(two_k2)) == 2
    assert not is_connected(two_k2) and is_anticonnected(two_k2)
    c4 = catalog.C4()
    assert is_connected(c4) and not is_anticonnected(c4)
    assert sorted(anticomponent_masks(c4)) == sorted(component_masks(complement(c4)))


def test_spanning_tree():
    t = spanning_tree(catalog.C5())
    assert len(t) == 4
    assert spanning_tree(catalog.TWO_K2()) is None
    assert len(spanning_tree(catalog.TWO_K2(), anti=True)) == 3


def test_substitute_k2_into_p4():
    h, map1, map2 = substitute(catalog.P4(), 1, catalog.get("k:2").graph)
    assert h.n == 5 and map1[1] == -1
    a, b = map2
    assert h.has_edge(a, b)
    for x in (0, 2):
        assert h.has_edge(map1[x], a) and h.has_edge(map1[x], b)
    assert not h.has_edge(map1[3], a)


@settings(max_examples=50)
@given(graphs(min_n=1, max_n=9))
def test_induced_subgraph_order(g):
    sub, order = induced_subgraph(g, [g.n - 1, 0])
    assert order == sorted(set(order))
    for i, u in enumerate(order):
        for j, v in enumerate(order):
            if i != j:
                assert sub.has_edge(i, j) == g.has_edge(u, v)
