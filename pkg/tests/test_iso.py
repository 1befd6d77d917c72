import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from p5free import catalog
from p5free.errors import CapabilityError
from p5free.graph import complement, graph_from_edges, relabel
from p5free.iso import are_isomorphic, canonical_form, canonical_graph, canonical_labeling, is_isomorphism

from .conftest import graphs
from .oracles import brute_isomorphic, burnside_count, edge_set, labelled_classes


def _shuffle(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return relabel(g, perm)


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_canonical_form_is_invariant(g):
    h = _shuffle(g, g.num_edges())
    assert canonical_form(g) == canonical_form(h)
    phi = are_isomorphic(g, h)
    assert phi is not None and is_isomorphism(g, h, phi)


@settings(max_examples=200)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_permutation_oracle(g, h):
    if g.n != h.n:
        assert are_isomorphic(g, h) is None
        return
    expected = brute_isomorphic(g.n, edge_set(g), edge_set(h))
    assert (are_isomorphic(g, h) is not None) == expected
    assert (canonical_form(g) == canonical_form(h)) == expected


def test_all_four_vertex_labelled_graphs_give_eleven_classes():
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    forms = set()
    for mask in range(64):
        forms.add(canonical_form(graph_from_edges(4, [p for k, p in enumerate(pairs) if mask >> k & 1])))
    assert len(forms) == 11 == labelled_classes(4)


def test_canonical_form_partitions_classes(classes_upto_7):
    for n, gs in classes_upto_7.items():
        assert len({canonical_form(g) for g in gs}) == len(gs) == burnside_count(n)


def test_canonical_graph_is_relabelling():
    g = catalog.FIG3().graph
    order, rows = canonical_labeling(g)
    c = canonical_graph(g, order)
    assert c.adj == rows
    assert are_isomorphic(g, c) is not None


def test_fig2_self_complementary():
    g = catalog.FIG2().graph
    assert g.num_edges() == 33 == 12 * 11 // 4
    phi = are_isomorphic(g, complement(g))
    assert phi is not None and is_isomorphism(g, complement(g), phi)
    assert canonical_form(g, cap=12) == canonical_form(complement(g), cap=12)


def test_caps():
    big = catalog.path(17).graph
    with pytest.raises(CapabilityError):
        are_isomorphic(big, big)
    with pytest.raises(CapabilityError):
        canonical_form(catalog.path(11).graph)
    assert canonical_form(catalog.path(11).graph, cap=11)


def test_small_orders_exhaustive():
    for n in range(1, 5):
        g = catalog.path(n).graph
        for p in permutations(range(n)):
            assert canonical_form(relabel(g, list(p))) == canonical_form(g)
