import random
import pytest
from hypothesis import given, settings

from p5free import catalog
from p5free.errors import CapabilityError
from p5free.graph import complement, graph_from_edges
from p5free.patterns import contains, enumerate_induced, find_induced, is_free

from .conftest import graphs
from .oracles import induced_copies


def test_p4_in_p5():
    e = find_induced(catalog.P5(), catalog.P4())
    assert e is not None and e.validate(catalog.P5())


def test_fig2_is_p5_free():
    assert find_induced(catalog.FIG2().graph, catalog.P5()) is None


def test_fig3_contains_2k2():
    ng = catalog.FIG3()
    e = find_induced(ng.graph, catalog.TWO_K2())
    assert e is not None and e.validate(ng.graph)
    # the pairs {1,3} and {4,10} form one such copy
    q = ng.indices([1, 3, 4, 10])
    assert any(set(c.image) == set(q) for c in enumerate_induced(ng.graph, catalog.TWO_K2()))


def test_copy_counts():
    assert len(enumerate_induced(catalog.P4(), catalog.P4())) == 1
    assert len(enumerate_induced(catalog.C5(), catalog.P4())) == 5 == induced_copies(catalog.C5(), catalog.P4())


def test_h6_p4_copies_put_v1_at_an_end():
    ng = catalog.get("H6")
    h6 = ng.graph
    copies = enumerate_induced(h6, catalog.P4())
    assert len(copies) == induced_copies(h6, catalog.P4())
    v1 = ng.index("v1")
    with_v1 = [c for c in copies if v1 in c.map]
    assert with_v1
    for c in with_v1:
        assert c.map.index(v1) in (0, 3)


def test_enumeration_is_deterministic_and_unique():
    g = catalog.FIG2().graph
    a = enumerate_induced(g, catalog.P4())
    assert a == enumerate_induced(g, catalog.P4())
    assert len({c.image for c in a}) == len(a)
    assert [c.image for c in a] == sorted(c.image for c in a)


def test_is_free():
    ok, w = is_free(catalog.C5(), [catalog.P5(), catalog.P5C()])
    assert ok and w is None
    ok, w = is_free(catalog.FIG3().graph, [catalog.P5(), catalog.P5C()])
    assert ok
    ok, w = is_free(catalog.P5(), [catalog.P5()])
    assert not ok and w.map == (0, 1, 2, 3, 4)


def test_is_free_brute_force_on_fig3():
    g = catalog.FIG3().graph
    assert induced_copies(g, catalog.P5()) == 0
    assert induced_copies(complement(g), catalog.P5()) == 0


def test_lexicographic_first_witness():
    g = catalog.path(7).graph
    ok, w = is_free(g, [catalog.P4()])
    assert not ok
    assert w.image == (0, 1, 2, 3)
    assert w.image == min(c.image for c in enumerate_induced(g, catalog.P4()))


def test_pattern_cap():
    with pytest.raises(CapabilityError):
        contains(catalog.path(12).graph, catalog.path(9).graph)


@settings(max_examples=100)
@given(graphs(max_n=8))
def test_embeddings_validate_and_counts_match_oracle(g):
    for pat in (catalog.P4(), catalog.C4(), catalog.BULL()):
        copies = enumerate_induced(g, pat)
        assert all(c.validate(g) for c in copies)
        assert len(copies) == induced_copies(g, pat)


def test_complement_duality_on_random_graphs():
    rng = random.Random(11)
    pats = [catalog.P5(), catalog.C4(), catalog.H6()]
    for _ in range(300):
        n = rng.randint(0, 10)
        p = rng.random()
        g = graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        for h in pats:
            assert is_free(g, [h])[0] == is_free(complement(g), [complement(h)])[0]


def test_host_counts_match_subset_scan(classes_upto_7):
    for n in range(4, 8):
        for pat in (catalog.P4(), catalog.P5(), catalog.C4()):
            if pat.n > n:
                continue
            fast = sum(contains(g, pat) for g in classes_upto_7[n])
            slow = sum(induced_copies(g, pat) > 0 for g in classes_upto_7[n])
            assert fast == slow
