import random
from itertools import combinations

import pytest

from p5free import catalog
from p5free.corpus import random_graph
from p5free.errors import CapabilityError
from p5free.graph import complement, graph_from_edges, is_connected_mask, substitute, to_mask
from p5free.patterns import contains
from p5free.recognizers import (
    antisimplicial_vertices,
    find_half_graph_cert,
    find_homogeneous_set,
    find_one_join,
    find_split_partition,
    half_graph_side,
    homogeneous_closure,
    is_mixed_on,
    is_prime,
    is_split_by_forbidden,
    mixed_witness,
    simplicial_vertices,
)
from p5free.validate import has_homogeneous_set, has_one_join, is_half_graph_oracle, is_split_brute


def test_mixed_examples():
    c5 = catalog.get("C5")
    g = c5.graph
    assert is_mixed_on(g, c5.index("c1"), c5.indices(["c2", "c3"]))
    assert not is_mixed_on(g, c5.index("c1"), [c5.index("c2")])
    with pytest.raises(ValueError):
        is_mixed_on(g, 0, [0, 1])
    f2 = catalog.FIG2()
    assert not is_mixed_on(f2.graph, f2.index(2), f2.indices([9, 10, 11, 12]))


def test_mixed_witness_on_p4_extension():
    # P4 p0..p3 plus v adjacent to p1 only
    g = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 1)])
    w = mixed_witness(g, 4, [0, 1, 2], "edge")
    assert w is not None and w.x == 1 and w.y in (0, 2) and w.validate(g, [0, 1, 2])
    assert mixed_witness(g, 1, [0, 2], "edge") is None


def test_mixed_on_connected_set_has_edge_witness():
    # every graph on <= 6 vertices: a vertex mixed on a connected set is mixed on one of its edges
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(2, 6)
        g = random_graph(n, rng.random(), rng.random())
        for v in range(n):
            rest = [u for u in range(n) if u != v]
            for k in range(2, len(rest) + 1):
                for xs in combinations(rest, k):
                    m = to_mask(xs)
                    if is_mixed_on(g, v, xs):
                        if is_connected_mask(g, m):
                            assert mixed_witness(g, v, xs, "edge") is not None
                        if is_connected_mask(complement(g), m):
                            assert mixed_witness(g, v, xs, "non-edge") is not None


def test_homogeneous_closure_examples():
    assert homogeneous_closure(catalog.C5(), 0, 2) == frozenset(range(5))
    assert homogeneous_closure(catalog.P4(), 0, 3) == frozenset(range(4))
    h, _, inner = substitute(catalog.C5(), 2, catalog.P4())
    for a, b in combinations(inner, 2):
        assert homogeneous_closure(h, a, b) <= set(inner)


def test_prime_examples():
    assert is_prime(catalog.C5())
    assert is_prime(catalog.FIG2().graph)
    assert not is_prime(catalog.get("k:3").graph)
    cert = find_homogeneous_set(catalog.C4())
    assert cert is not None and cert.validate(catalog.C4())


def test_primality_matches_oracle_and_complement(classes_upto_7):
    for n, gs in classes_upto_7.items():
        for g in gs:
            prime = is_prime(g)
            assert prime == is_prime(complement(g))
            if n <= 6:
                assert prime == (n >= 4 and not has_homogeneous_set(g))
            cert = find_homogeneous_set(g)
            assert cert is None or cert.validate(g)


def test_simplicial_examples():
    f2 = catalog.FIG2()
    assert {f2.label(v) for v in simplicial_vertices(f2.graph)} == {"1", "4"}
    assert {f2.label(v) for v in antisimplicial_vertices(f2.graph)} == {"2", "3"}
    assert not simplicial_vertices(catalog.C5()) and not antisimplicial_vertices(catalog.C5())
    assert simplicial_vertices(catalog.P4()) == {0, 3}
    assert antisimplicial_vertices(catalog.P4()) == {1, 2}


def test_prime_graphs_have_clique_of_antisimplicials(classes_upto_7):
    for gs in classes_upto_7.values():
        for g in gs:
            assert antisimplicial_vertices(g) == simplicial_vertices(complement(g))
            if is_prime(g):
                a, s = antisimplicial_vertices(g), simplicial_vertices(g)
                assert g.is_clique(to_mask(a)) and g.is_stable(to_mask(s))


def test_split_examples():
    k4 = catalog.get("k:4").graph
    cert = find_split_partition(k4)
    assert cert is not None and len(cert.K) == 4 and not cert.S
    assert find_split_partition(catalog.C4()) is None
    assert find_split_partition(catalog.FIG3().graph) is None
    assert is_split_by_forbidden(catalog.P4()) and find_split_partition(catalog.P4())
    assert not is_split_by_forbidden(catalog.FIG2().graph)
    assert not is_split_by_forbidden(catalog.C5())


def test_split_recognizers_agree(classes_upto_7):
    for n, gs in classes_upto_7.items():
        for g in gs:
            cert = find_split_partition(g)
            assert (cert is not None) == is_split_by_forbidden(g)
            assert cert is None or cert.validate(g)
            if n <= 6:
                assert (cert is not None) == is_split_brute(g)
    rng = random.Random(2024)
    for i in range(1000):
        g = random_graph(rng.randint(1, 14), rng.random(), i)
        assert (find_split_partition(g) is not None) == is_split_by_forbidden(g)


def test_one_join_examples():
    oj = find_one_join(catalog.P4())
    assert oj is not None and oj.validate(catalog.P4())
    assert find_one_join(catalog.C5()) is None
    fig3 = catalog.FIG3().graph
    assert find_one_join(fig3) is None
    # The complement of the drawn graph does admit a 1-join; the certificate re-checks.
    oj = find_one_join(complement(fig3))
    assert oj is not None and oj.validate(complement(fig3)) and has_one_join(complement(fig3))


def test_one_join_matches_oracle(classes_upto_7):
    for n in range(4, 8):
        for g in classes_upto_7[n]:
            oj = find_one_join(g)
            assert (oj is not None) == has_one_join(g)
            assert oj is None or oj.validate(g)


def test_one_join_cap():
    with pytest.raises(CapabilityError):
        find_one_join(catalog.path(6).graph, cap=5)


def test_half_graph_examples():
    cert = find_half_graph_cert(catalog.get("o:2").graph)
    assert cert is not None and cert.k == 2
    cert = find_half_graph_cert(catalog.get("o:4").graph)
    assert cert is not None and cert.k == 4 and cert.validate(catalog.get("o:4").graph)
    assert find_half_graph_cert(catalog.C4()) is None
    assert find_half_graph_cert(catalog.get("o:3").graph.__class__(0, [])) is None
    side = half_graph_side(complement(catalog.get("o:3").graph))
    assert side is not None and side[0] == "complement"


def _bipartite_cases():
    out = []
    for k in range(1, 6):
        out.append(catalog.half_graph(k).graph)
    o5 = catalog.half_graph(5).graph
    for a, b in combinations(range(10), 2):
        adj = list(o5.adj)
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
        out.append(o5.__class__(10, adj))
    rng = random.Random(5)
    for _ in range(300):
        k = rng.randint(1, 5)
        p = rng.random()
        edges = [(i, k + j) for i in range(k) for j in range(k) if rng.random() < p]
        out.append(graph_from_edges(2 * k, edges))
    return out


def test_half_graph_recognizer_matches_isomorphism_oracle(classes_upto_7):
    cases = _bipartite_cases()
    cases += [g for n in (2, 4, 6) for g in classes_upto_7[n] if not contains(g, catalog.get("c:3").graph)]
    for g in cases:
        cert = find_half_graph_cert(g)
        assert (cert is not None) == is_half_graph_oracle(g)
        assert cert is None or cert.validate(g)
