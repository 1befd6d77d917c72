"""Independent re-checking of verdict certificates and counterwitnesses.

Everything here works from definitions: adjacency queries, subset scans with
``itertools`` and the backtracking isomorphism test.  None of it calls the
recognizers or pattern search whose output it audits.
"""

from __future__ import annotations

from itertools import combinations

from . import catalog
from .graph import Graph, complement, induced_by_order
from .iso import are_isomorphic, is_isomorphism
from .patterns import Embedding
from .theorems import FAILS, HOLDS, LEMMAS, PRECONDITION_NOT_MET, Verdict, VSet


def neighbours(g: Graph, v: int) -> list[int]:
    return [u for u in range(g.n) if u != v and g.has_edge(u, v)]


def clique(g: Graph, vs) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(list(vs), 2))


def stable(g: Graph, vs) -> bool:
    return not any(g.has_edge(a, b) for a, b in combinations(list(vs), 2))


def simplicial(g: Graph, v: int) -> bool:
    return clique(g, neighbours(g, v))


def antisimplicial(g: Graph, v: int) -> bool:
    return stable(g, [u for u in range(g.n) if u != v and not g.has_edge(u, v)])


def connected(g: Graph, vs, *, anti: bool = False) -> bool:
    vs = list(vs)
    if not vs:
        return True
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        x = stack.pop()
        for y in vs:
            if y not in seen and g.has_edge(x, y) != anti:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(vs)


def mixed(g: Graph, v: int, xs) -> bool:
    hits = [g.has_edge(v, x) for x in xs]
    return any(hits) and not all(hits)


def copies(g: Graph, pattern: Graph) -> list[tuple[int, ...]]:
    """Sorted vertex sets inducing ``pattern``, by scanning every subset of that size."""
    return [s for s in combinations(range(g.n), pattern.n) if are_isomorphic(induced_by_order(g, s), pattern) is not None]


def has_homogeneous_set(g: Graph) -> bool:
    n = g.n
    for size in range(2, n):
        for xs in combinations(range(n), size):
            inside = set(xs)
            if not any(mixed(g, w, xs) for w in range(n) if w not in inside):
                return True
    return False


def has_one_join(g: Graph) -> bool:
    """Edge-counting formulation: a side X admits a 1-join iff the edges leaving X
    form a complete bipartite graph between proper, non-empty parts of each side."""
    n = g.n
    for size in range(2, n - 1):
        for xs in combinations(range(n), size):
            inside = set(xs)
            cross = [(x, y) for x in xs for y in range(n) if y not in inside and g.has_edge(x, y)]
            if not cross:
                continue
            b = {x for x, _ in cross}
            c = {y for _, y in cross}
            if len(cross) == len(b) * len(c) and len(b) < size and len(c) < n - size:
                return True
    return False


def is_split_brute(g: Graph) -> bool:
    for size in range(g.n + 1):
        for ks in combinations(range(g.n), size):
            rest = [v for v in range(g.n) if v not in ks]
            if clique(g, ks) and stable(g, rest):
                return True
    return False


def is_half_graph_oracle(g: Graph) -> bool:
    return g.n >= 2 and g.n % 2 == 0 and are_isomorphic(g, catalog.half_graph(g.n // 2).graph) is not None


def _tree_ok(g: Graph, pairs, *, anti: bool = False) -> bool:
    pairs = list(pairs)
    if len(pairs) != g.n - 1:
        return False
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        if a == b or g.has_edge(a, b) == anti:
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _closed_component(g: Graph, members, *, anti: bool = False) -> bool:
    inside = set(members)
    if not inside or len(inside) == g.n:
        return False
    return not any(g.has_edge(x, y) != anti for x in inside for y in range(g.n) if y not in inside)


def _vs(x) -> list[int]:
    return x.members() if isinstance(x, VSet) else sorted(x)


def _emb(e: Embedding, host: Graph, pattern: Graph) -> bool:
    return e is not None and e.pattern == pattern and e.validate(host)


# -- per-lemma validators ----------------------------------------------------------------


def _prime_conn(g, holds, p):
    if holds:
        return _tree_ok(g, p["spanning_tree"].pairs) and _tree_ok(g, p["complement_spanning_tree"].pairs, anti=True)
    return _closed_component(g, _vs(p["component"]), anti=p["side"] == "complement")


def _sand_a(g, holds, p):
    if holds:
        return simplicial(g, p["simplicial"].v) and antisimplicial(g, p["antisimplicial"].v)
    return not any(simplicial(g, v) for v in range(g.n)) or not any(antisimplicial(g, v) for v in range(g.n))


def _a_or_1join(g, holds, p):
    if holds:
        if "antisimplicial" in p:
            return antisimplicial(g, p["antisimplicial"].v)
        return p["one_join"].validate(g)
    return not any(antisimplicial(g, v) for v in range(g.n)) and not has_one_join(g)


def _s_or_a(g, holds, p):
    if holds:
        test = simplicial if p["kind"] == "simplicial" else antisimplicial
        return test(g, p["vertex"].v)
    return not any(simplicial(g, v) or antisimplicial(g, v) for v in range(g.n))


def _anticonnected_subsets(g, common):
    for size in range(2, len(common) + 1):
        for a in combinations(common, size):
            if connected(g, a, anti=True):
                yield a


def _nbrs_outside(g, u, v):
    return [
        w for w in range(g.n) if w not in (u, v) and not g.has_edge(w, u) and not g.has_edge(w, v)
    ]


def _nbrs(g, holds, p):
    if not holds:
        u, v = p["u"].v, p["v"].v
        common = [x for x in range(g.n) if g.has_edge(x, u) and g.has_edge(x, v)]
        if clique(g, common):
            return False
        outside = _nbrs_outside(g, u, v)
        return not any(mixed(g, w, a) for a in _anticonnected_subsets(g, common) for w in outside)
    want = {(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)}
    seen = set()
    for e in p["pairs"]:
        u, v = e["u"].v, e["v"].v
        seen.add((min(u, v), max(u, v)))
        common = [x for x in range(g.n) if g.has_edge(x, u) and g.has_edge(x, v)]
        if e["outcome"] == "clique":
            if not clique(g, common):
                return False
        else:
            a, w = _vs(e["A"]), e["w"].v
            if not set(a) <= set(common) or w not in _nbrs_outside(g, u, v):
                return False
            if not connected(g, a, anti=True) or not mixed(g, w, a):
                return False
    return seen == want


def _seinsche(g, holds, p):
    if holds:
        return _closed_component(g, _vs(p["component"]), anti=p["side"] == "complement")
    return connected(g, range(g.n)) and connected(g, range(g.n), anti=True)


def _prime_has_p4(g, holds, p):
    if holds:
        return _emb(p["p4"], g, catalog.P4())
    return not copies(g, catalog.P4())


def _p4_role_table(g):
    p4 = catalog.P4()
    ends = {v: 0 for v in range(g.n)}
    mids = {v: 0 for v in range(g.n)}
    for s in copies(g, p4):
        h = induced_by_order(g, s)
        for i, v in enumerate(s):
            if len(neighbours(h, i)) == 1:
                ends[v] += 1
            else:
                mids[v] += 1
    return ends, mids


def _simp_char(g, holds, p):
    ends, mids = _p4_role_table(g)

    def row_ok(v):
        return simplicial(g, v) == (mids[v] == 0) and antisimplicial(g, v) == (ends[v] == 0)

    if holds:
        rows = p["vertices"]
        if [r["vertex"].v for r in rows] != list(range(g.n)):
            return False
        for r in rows:
            v = r["vertex"].v
            if r["simplicial"] != simplicial(g, v) or r["antisimplicial"] != antisimplicial(g, v):
                return False
            if r["degree_one_in_every_p4"] != (mids[v] == 0) or r["degree_two_in_every_p4"] != (ends[v] == 0):
                return False
        return all(row_ok(v) for v in range(g.n))
    return not row_ok(p["vertex"].v)


def _aclique(g, holds, p):
    anti = [v for v in range(g.n) if antisimplicial(g, v)]
    simp = [v for v in range(g.n) if simplicial(g, v)]
    if holds:
        return _vs(p["antisimplicial_set"]) == anti and _vs(p["simplicial_set"]) == simp and clique(g, anti) and stable(g, simp)
    a, b = (x.v for x in p["pair"])
    if p["kind"] == "antisimplicial non-edge":
        return a in anti and b in anti and not g.has_edge(a, b)
    return a in simp and b in simp and g.has_edge(a, b)


def _split_subgraph(g, holds, p):
    union = sorted({v for v in range(g.n) if antisimplicial(g, v) or simplicial(g, v)})
    if _vs(p["vertices"]) != union:
        return False
    if holds:
        k, s = _vs(p["partition"]["K"]), _vs(p["partition"]["S"])
        return (
            sorted(k + s) == union
            and clique(g, k)
            and stable(g, s)
            and bool(union)
            and connected(g, union)
            and connected(g, union, anti=True)
        )
    h = induced_by_order(g, union)
    return not union or not is_split_brute(h) or not connected(g, union) or not connected(g, union, anti=True)


def _saas_ok(g, s):
    h = induced_by_order(g, s)
    ends = [s[i] for i in range(4) if len(neighbours(h, i)) == 1]
    mids = [s[i] for i in range(4) if len(neighbours(h, i)) == 2]
    return all(simplicial(g, x) for x in ends) and all(antisimplicial(g, x) for x in mids)


def _saas(g, holds, p):
    if holds:
        e = p["p4"]
        return _emb(e, g, catalog.P4()) and _saas_ok(g, sorted(e.map))
    return not any(_saas_ok(g, s) for s in copies(g, catalog.P4()))


def _hoang_reed(g, holds, p):
    if holds:
        side = g if p["side"] == "G" else complement(g)
        return _emb(p["h6"], side, catalog.H6())
    return not copies(g, catalog.H6()) and not copies(complement(g), catalog.H6())


def _h6_flags(g, side_name, m):
    side = g if side_name == "G" else complement(g)
    d1, d3 = (m[0], m[3]), (m[1], m[2])
    return (
        all(simplicial(side, x) for x in d1),
        sum(antisimplicial(side, x) for x in d3),
        all(simplicial(g, x) for x in d1),
        sum(antisimplicial(g, x) for x in d3),
    )


def _h6_validator(required):
    def check(g, holds, p):
        h6 = catalog.H6()
        if holds:
            w = p["witness"]
            side = g if w.side == "G" else complement(g)
            if not Embedding(h6, w.map).validate(side):
                return False
            flags = _h6_flags(g, w.side, w.map)
            if flags != (w.deg1_simplicial, w.deg3_antisimplicial_count, w.g_deg1_simplicial, w.g_deg3_antisimplicial_count):
                return False
            return flags[0] and flags[1] >= required
        listed = p["copies"]
        brute = {("G", s) for s in copies(g, h6)} | {("complement", s) for s in copies(complement(g), h6)}
        if {(w.side, tuple(sorted(w.map))) for w in listed} != brute or len(listed) != len(brute):
            return False
        for w in listed:
            side = g if w.side == "G" else complement(g)
            if not Embedding(h6, w.map).validate(side):
                return False
            f = _h6_flags(g, w.side, w.map)
            if f[0] and f[1] >= required:
                return False
        return True

    return check


def _conj_1_6(g, holds, p):
    if holds:
        esc = p["escape"]
        if esc == "isomorphic_to_C5":
            return is_isomorphism(g, catalog.C5(), [x.v for x in p["bijection"]])
        if esc == "split":
            return p["partition"].validate(g)
        if esc == "homogeneous_set":
            return p["homogeneous_set"].validate(g)
        side = g if p["side"] == "G" else complement(g)
        return p["one_join"].validate(side)
    obstruction = p["split_obstruction"]
    not_split = obstruction is not None and obstruction.validate(g) and obstruction.pattern in (
        catalog.C4(),
        catalog.TWO_K2(),
        catalog.C5(),
    )
    return (
        are_isomorphic(g, catalog.C5()) is None
        and not_split
        and not has_homogeneous_set(g)
        and not has_one_join(g)
        and not has_one_join(complement(g))
    )


def _c5_unique(g, holds, p):
    if holds:
        return is_isomorphism(g, catalog.C5(), [x.v for x in p["bijection_to_C5"]])
    return g.n != 5 and _emb(p["c5"], g, catalog.C5())


def _obst(g, holds, p):
    if holds:
        side = g if p["side"] == "G" else complement(g)
        return p["half_graph"].validate(side) and is_half_graph_oracle(side)
    return not is_half_graph_oracle(g) and not is_half_graph_oracle(complement(g))


def _bull_struct(g, holds, p):
    if holds:
        out = p["outcome"]
        if out == "at_most_two_vertices":
            return g.n <= 2
        if out == "isomorphic_to_C5":
            return is_isomorphism(g, catalog.C5(), [x.v for x in p["bijection"]])
        if out == "homogeneous_set":
            return p["homogeneous_set"].validate(g)
        side = g if p["side"] == "G" else complement(g)
        return p["half_graph"].validate(side)
    return (
        g.n > 2
        and are_isomorphic(g, catalog.C5()) is None
        and not has_homogeneous_set(g)
        and not is_half_graph_oracle(g)
        and not is_half_graph_oracle(complement(g))
    )


def _split_iff(g, holds, p):
    brute_split = is_split_brute(g)
    brute_free = not any(copies(g, pat) for pat in (catalog.C4(), catalog.TWO_K2(), catalog.C5()))
    part, forb = p["partition"], p["forbidden"]
    if holds:
        if part is not None:
            return part.validate(g) and forb is None and brute_free
        return forb is not None and forb.validate(g) and not brute_split
    # A reported disagreement stands only if the brute-force routes disagree too.
    return brute_split != brute_free


def _mixed_pair(g, holds, p):
    if holds:
        return p["configurations"] >= 0
    v, x1, x2 = p["v"].v, _vs(p["X1"]), _vs(p["X2"])
    h = g if p["form"].startswith("connected") else complement(g)
    return (
        not set(x1) & set(x2)
        and v not in x1 + x2
        and connected(h, x1)
        and connected(h, x2)
        and not any(h.has_edge(a, b) for a in x1 for b in x2)
        and mixed(h, v, x1)
        and mixed(h, v, x2)
    )


def _mixed3(g, holds, p):
    if holds:
        return p["configurations"] >= 0
    u, v, w, a = p["u"].v, p["v"].v, p["w"].v, _vs(p["A"])
    common = {x for x in range(g.n) if g.has_edge(x, u) and g.has_edge(x, v)}
    return (
        not g.has_edge(u, v)
        and set(a) <= common
        and connected(g, a, anti=True)
        and w not in set(a) | {u, v}
        and mixed(g, w, a)
        and mixed(g, w, [u, v])
    )


def _mixed4(g, holds, p):
    if holds:
        return p["configurations"] >= 0
    u, v, w, z, a = p["u"].v, p["v"].v, p["w"].v, p["z"].v, _vs(p["A"])
    common = {x for x in range(g.n) if g.has_edge(x, u) and g.has_edge(x, v)}
    return (
        stable(g, [u, v, w])
        and set(a) <= common
        and connected(g, a, anti=True)
        and mixed(g, w, a)
        and g.has_edge(w, z)
        and z not in set(a) | {u, v}
        and mixed(g, z, [u, v])
    )


VALIDATORS = {
    "PRIME_CONN": _prime_conn,
    "SAND_A": _sand_a,
    "A_OR_1JOIN": _a_or_1join,
    "S_OR_A": _s_or_a,
    "NBRS": _nbrs,
    "SEINSCHE": _seinsche,
    "PRIME_HAS_P4": _prime_has_p4,
    "SIMP_CHAR": _simp_char,
    "ACLIQUE": _aclique,
    "SPLIT_SUBGRAPH": _split_subgraph,
    "SAAS": _saas,
    "HOANG_REED": _hoang_reed,
    "H6_CONJ": _h6_validator(2),
    "H6_WEAK": _h6_validator(1),
    "CONJ_1_6": _conj_1_6,
    "C5_UNIQUE": _c5_unique,
    "OBST": _obst,
    "BULL_STRUCT": _bull_struct,
    "SPLIT_IFF": _split_iff,
    "MIXED_PAIR": _mixed_pair,
    "MIXED3": _mixed3,
    "MIXED4": _mixed4,
}


def _clause(g: Graph, text: str) -> bool:
    if text == "prime":
        return g.n >= 4 and not has_homogeneous_set(g)
    if text == "not split":
        return not is_split_brute(g)
    if text == "at least two vertices":
        return g.n >= 2
    if text == "P5-free or P5C-free":
        return _clause(g, "P5-free") or _clause(g, "P5C-free")
    if text.startswith("contains "):
        return not _clause(g, text[len("contains ") :] + "-free")
    name = text.removesuffix("-free")
    if name == "P5C":
        return not copies(complement(g), catalog.P5())
    return not copies(g, catalog.get(name).graph)


def precondition_holds(lemma_id: str, g: Graph) -> bool:
    """Decide a lemma's hypotheses by subset scans (slow; meant for small graphs)."""
    return all(_clause(g, text) for text, _ in LEMMAS[lemma_id].preconditions)


def validate_verdict(verdict: Verdict, g: Graph, *, check_precondition: bool = False) -> bool:
    """True iff the verdict's certificate (holds) or counterwitness (fails) re-checks.

    With ``check_precondition`` the status is also checked against an independent
    evaluation of the lemma's hypotheses.
    """
    if check_precondition and precondition_holds(verdict.lemma, g) == (verdict.status == PRECONDITION_NOT_MET):
        return False
    if verdict.status == PRECONDITION_NOT_MET:
        return verdict.certificate is None and verdict.counterwitness is None
    if verdict.status == HOLDS:
        if verdict.certificate is None or verdict.counterwitness is not None:
            return False
        return bool(VALIDATORS[verdict.lemma](g, True, verdict.certificate))
    if verdict.status == FAILS:
        if verdict.counterwitness is None or verdict.certificate is not None:
            return False
        return bool(VALIDATORS[verdict.lemma](g, False, verdict.counterwitness))
    return False


__all__ = [
    "antisimplicial",
    "copies",
    "has_homogeneous_set",
    "has_one_join",
    "is_half_graph_oracle",
    "is_split_brute",
    "precondition_holds",
    "simplicial",
    "validate_verdict",
]
