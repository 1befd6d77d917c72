"""Re-verification of the two published counterexample graphs.

Each check records the claim, whether it was confirmed, and the evidence that
confirms it, in the graph's own vertex labels.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from . import catalog
from .graph import complement, induced_by_order
from .iso import are_isomorphic, is_isomorphism
from .patterns import find_induced
from .recognizers import (
    antisimplicial_vertices,
    find_homogeneous_set,
    find_one_join,
    find_split_partition,
    is_split_by_forbidden,
    simplicial_vertices,
)
from .theorems import FAILS, HOLDS, HarnessConfig, check_lemma


@dataclass
class Check:
    name: str
    claim: str
    ok: bool
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "claim": self.claim, "ok": self.ok, "evidence": self.evidence}


@dataclass
class Battery:
    graph: str
    checks: list[Check]
    notes: list[dict]
    seconds: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self, *, timing: bool = True) -> dict:
        d = {
            "graph": self.graph,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "notes": self.notes,
        }
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d


def _names(ng: catalog.NamedGraph, vs) -> list[str]:
    return [ng.label(v) for v in sorted(vs)]


def _emb(ng: catalog.NamedGraph, e) -> list[str] | None:
    return None if e is None else [ng.label(v) for v in e.map]


def _lemma(ng, lid, expected, cfg) -> Check:
    v = check_lemma(lid, ng.graph, cfg)
    return Check(f"{lid.lower()}_{expected}", f"{lid} {expected} on {ng.id}", v.status == expected, v.to_dict(ng.labels))


def _common(ng: catalog.NamedGraph) -> list[Check]:
    g = ng.graph
    gc = complement(g)
    hom = find_homogeneous_set(g)
    p5 = find_induced(g, catalog.P5())
    p5c = find_induced(gc, catalog.P5())
    split = find_split_partition(g)
    return [
        Check("prime", "prime (no homogeneous set)", g.n >= 4 and hom is None, {"homogeneous_set": None if hom is None else _names(ng, hom.X)}),
        Check("p5_free", "P5-free", p5 is None, {"p5": _emb(ng, p5)}),
        Check("p5c_free", "P5C-free", p5c is None, {"p5c": _emb(ng, p5c)}),
        Check(
            "not_split",
            "not split",
            split is None and not is_split_by_forbidden(g),
            {"partition": None if split is None else split.to_dict(ng.labels)},
        ),
    ]


def fig2_battery(config: HarnessConfig | None = None) -> Battery:
    cfg = config or HarnessConfig()
    t0 = time.perf_counter()
    ng = catalog.FIG2()
    g = ng.graph
    gc = complement(g)
    phi = [ng.index(catalog.FIG2_PHI[int(ng.label(v))]) for v in range(g.n)]
    found = are_isomorphic(g, gc, cap=cfg.iso_cap)
    simp = simplicial_vertices(g)
    anti = antisimplicial_vertices(g)
    two, three = ng.index(2), ng.index(3)
    c4_with_23 = [
        _names(ng, q)
        for q in combinations(range(g.n), 4)
        if two in q and three in q and are_isomorphic(induced_by_order(g, list(q)), catalog.C4()) is not None
    ]
    checks = [
        Check("order", "12 vertices", g.n == 12, {"n": g.n}),
        Check("size", "33 edges (= 12*11/4)", g.num_edges() == 33 == 12 * 11 // 4, {"m": g.num_edges()}),
        Check(
            "phi_isomorphism",
            "the published map phi is an isomorphism onto the complement",
            is_isomorphism(g, gc, phi),
            {"phi": {str(k): str(v) for k, v in sorted(catalog.FIG2_PHI.items())}},
        ),
        Check(
            "self_complementary",
            "isomorphic to its complement (independent search)",
            found is not None,
            {"isomorphism": None if found is None else {ng.label(v): ng.label(w) for v, w in enumerate(found)}},
        ),
        *_common(ng),
        Check("c5_free", "C5-free", find_induced(g, catalog.C5()) is None, {}),
        Check("simplicial_set", "simplicial vertices are exactly {1, 4}", set(_names(ng, simp)) == {"1", "4"}, {"simplicial": _names(ng, simp)}),
        Check(
            "antisimplicial_set",
            "antisimplicial vertices are exactly {2, 3}",
            set(_names(ng, anti)) == {"2", "3"},
            {"antisimplicial": _names(ng, anti)},
        ),
        Check(
            "no_c4_through_2_3",
            "no induced C4 contains both 2 and 3",
            not c4_with_23,
            {"c4_copies_containing_2_and_3": c4_with_23, "subsets_scanned": 45},
        ),
        _lemma(ng, "H6_CONJ", FAILS, cfg),
        _lemma(ng, "H6_WEAK", HOLDS, cfg),
        _lemma(ng, "HOANG_REED", HOLDS, cfg),
    ]
    notes = []
    v = check_lemma("CONJ_1_6", g, cfg)
    if v.status == FAILS:
        notes.append({"finding": "FIG2 also fails CONJ_1_6", "verdict": v.to_dict(ng.labels)})
    return Battery("FIG2", checks, notes, time.perf_counter() - t0)


def fig3_battery(config: HarnessConfig | None = None) -> Battery:
    cfg = config or HarnessConfig()
    t0 = time.perf_counter()
    ng = catalog.FIG3()
    g = ng.graph
    gc = complement(g)
    c4 = find_induced(g, catalog.C4())
    kk = find_induced(g, catalog.TWO_K2())
    phi = are_isomorphic(g, catalog.C5(), cap=cfg.iso_cap) if g.n == 5 else None
    oj_g = find_one_join(g, cfg.onejoin_cap)
    oj_c = find_one_join(gc, cfg.onejoin_cap)
    checks = [
        Check("order", "10 vertices", g.n == 10, {"n": g.n}),
        Check("size", "19 edges", g.num_edges() == 19, {"m": g.num_edges()}),
        *_common(ng),
        Check("contains_c4", "contains an induced C4", c4 is not None, {"c4": _emb(ng, c4)}),
        Check("contains_2k2", "contains an induced 2K2", kk is not None, {"2k2": _emb(ng, kk)}),
        Check("not_c5", "not isomorphic to C5", phi is None, {"n": g.n}),
        Check(
            "no_one_join",
            "no 1-join (all 2^10 vertex subsets scanned)",
            oj_g is None,
            {"one_join": None if oj_g is None else oj_g.to_dict(ng.labels), "subsets_scanned": 1 << g.n},
        ),
        Check(
            "no_one_join_complement",
            "complement has no 1-join (all 2^10 vertex subsets scanned)",
            oj_c is None,
            {"one_join": None if oj_c is None else oj_c.to_dict(ng.labels), "subsets_scanned": 1 << g.n},
        ),
        _lemma(ng, "CONJ_1_6", FAILS, cfg),
    ]
    notes = []
    if oj_c is not None:
        notes.append(
            {
                "finding": "the complement of FIG3 admits a 1-join, so CONJ_1_6 holds on FIG3",
                "one_join_complement": oj_c.to_dict(ng.labels),
            }
        )
    return Battery("FIG3", checks, notes, time.perf_counter() - t0)


def run_batteries(config: HarnessConfig | None = None) -> list[Battery]:
    return [fig2_battery(config), fig3_battery(config)]
