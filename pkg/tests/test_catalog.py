import pytest

from p5free import catalog
from p5free.graph import complement
from p5free.iso import are_isomorphic, is_isomorphism


def test_h6():
    ng = catalog.get("h6")
    g = ng.graph
    assert (g.n, g.num_edges()) == (6, 6)
    assert {ng.label(v) for v in range(6) if g.degree(v) == 1} == {"v1", "v4"}
    assert {ng.label(v) for v in range(6) if g.degree(v) == 3} == {"v2", "v3"}


def test_bull_and_p5c():
    b = catalog.get("bull")
    assert b.graph.num_edges() == 5 and b.graph.degree(b.index("x1")) == 3
    assert are_isomorphic(catalog.get("p5c").graph, complement(catalog.P5())) is not None
    assert catalog.get("house").id == "P5C"


def test_fig2_phi_is_published_isomorphism():
    ng = catalog.FIG2()
    g = ng.graph
    phi = [ng.index(catalog.FIG2_PHI[int(ng.label(v))]) for v in range(12)]
    assert sorted(phi) == list(range(12))
    assert is_isomorphism(g, complement(g), phi)


def test_fig3_edges_as_drawn():
    ng = catalog.FIG3()
    g = ng.graph
    assert (g.n, g.num_edges()) == (10, 19)
    assert g.has_edge(ng.index(6), ng.index(5))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_half_graph_family(k):
    ng = catalog.get(f"o:{k}")
    g = ng.graph
    assert g.n == 2 * k and g.num_edges() == k * (k + 1) // 2
    a = [ng.index(f"a{i}") for i in range(1, k + 1)]
    b = [ng.index(f"b{i}") for i in range(1, k + 1)]
    assert sorted(g.degree(v) for v in a) == list(range(1, k + 1))
    assert all(g.has_edge(b[-1], x) for x in a)


def test_o2_is_p4():
    assert are_isomorphic(catalog.get("O_2").graph, catalog.P4()) is not None


@pytest.mark.parametrize("name", ["fig2", "FIG3", "c:6", "k4", "p_3", "2k2", "co-p5"])
def test_lookup(name):
    assert catalog.get(name).graph.n > 0


def test_unknown_id():
    with pytest.raises(KeyError, match="unknown catalog graph"):
        catalog.get("petersen")
