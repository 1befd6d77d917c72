"""Lemmas about {P5, co-P5}-free graphs as executable, certificate-producing checks.

``check_lemma(lemma_id, G)`` evaluates one statement on one graph and returns a
``Verdict``.  A statement whose hypothesis does not apply to ``G`` yields
``precondition_not_met`` rather than a vacuous ``holds``.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from . import catalog
from .errors import PreconditionError, TheoremViolation
from .formats import to_graph6
from .graph import (
    Graph,
    anticomponent_masks,
    bits,
    complement,
    component_masks,
    induced_by_order,
    is_anticonnected_mask,
    is_connected_mask,
    spanning_tree,
    to_mask,
)
from .iso import DEFAULT_ISO_CAP, are_isomorphic
from .patterns import Embedding, contains, enumerate_induced, find_induced
from .recognizers import (
    ONEJOIN_CAP,
    HalfGraphCert,
    HomogeneousSetCert,
    SplitPartitionCert,
    antisimplicial_mask,
    find_homogeneous_set,
    find_one_join,
    find_split_partition,
    half_graph_side,
    is_prime,
    simplicial_mask,
)

HOLDS = "holds"
FAILS = "fails"
PRECONDITION_NOT_MET = "precondition_not_met"


# -- JSON-aware witness wrappers ------------------------------------------------


@dataclass(frozen=True)
class V:
    """A single vertex inside a certificate payload."""

    v: int


@dataclass(frozen=True)
class VSet:
    mask: int

    @classmethod
    def of(cls, vs: Iterable[int]) -> VSet:
        return cls(to_mask(vs))

    def members(self) -> list[int]:
        return list(bits(self.mask))


@dataclass(frozen=True)
class Edges:
    pairs: tuple[tuple[int, int], ...]


def jsonify(obj, labels: Sequence[str] | None = None):
    """Convert a payload to JSON-ready data, naming vertices by label or 1-based index."""

    def name(v: int):
        return labels[v] if labels else v + 1

    if isinstance(obj, V):
        return name(obj.v)
    if isinstance(obj, VSet):
        return [name(v) for v in bits(obj.mask)]
    if isinstance(obj, Edges):
        return [[name(a), name(b)] for a, b in obj.pairs]
    if hasattr(obj, "to_dict"):
        return obj.to_dict(labels)
    if isinstance(obj, dict):
        return {str(k): jsonify(v, labels) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(x, labels) for x in obj]
    return obj


# -- H6 witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class H6Witness:
    """An induced H6 in G or its complement.

    ``map`` lists the vertices playing v1..v6 (v1, v4 have degree one; v2, v3
    degree three).  The primary flags evaluate (anti)simpliciality in the
    graph on the witness's side; the ``g_*`` flags evaluate them in G itself.
    """

    side: str
    map: tuple[int, ...]
    deg1_simplicial: bool
    deg3_antisimplicial_count: int
    g_deg1_simplicial: bool
    g_deg3_antisimplicial_count: int

    @property
    def degree_one(self) -> tuple[int, int]:
        return self.map[0], self.map[3]

    @property
    def degree_three(self) -> tuple[int, int]:
        return self.map[1], self.map[2]

    def to_dict(self, labels=None) -> dict:
        name = (lambda v: labels[v]) if labels else (lambda v: v + 1)
        return {
            "type": "H6Witness",
            "side": self.side,
            "roles": {f"v{i + 1}": name(v) for i, v in enumerate(self.map)},
            "deg1_simplicial": self.deg1_simplicial,
            "deg3_antisimplicial_count": self.deg3_antisimplicial_count,
            "g_deg1_simplicial": self.g_deg1_simplicial,
            "g_deg3_antisimplicial_count": self.g_deg3_antisimplicial_count,
        }


# -- configuration and per-graph facts --------------------------------------------


@dataclass(frozen=True)
class HarnessConfig:
    iso_cap: int = DEFAULT_ISO_CAP
    onejoin_cap: int = ONEJOIN_CAP
    mixed_exhaustive_max_n: int = 6
    mixed_samples: int = 200
    seed: int = 0

    def to_dict(self, labels=None) -> dict:
        return dict(self.__dict__)


class Facts:
    """Lazily computed, cached properties of one graph shared by all lemma checks."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._has: dict[str, bool] = {}

    @cached_property
    def gc(self) -> Graph:
        return complement(self.g)

    def has(self, name: str) -> bool:
        r = self._has.get(name)
        if r is None:
            if name == "P5C":
                r = contains(self.gc, catalog.P5())
            else:
                r = contains(self.g, PATTERNS[name]())
            self._has[name] = r
        return r

    @cached_property
    def prime(self) -> bool:
        return is_prime(self.g)

    @cached_property
    def simp(self) -> int:
        return simplicial_mask(self.g)

    @cached_property
    def anti(self) -> int:
        return antisimplicial_mask(self.g)

    @cached_property
    def split(self) -> SplitPartitionCert | None:
        return find_split_partition(self.g)

    @cached_property
    def homogeneous(self) -> HomogeneousSetCert | None:
        return find_homogeneous_set(self.g)

    @cached_property
    def half(self) -> tuple[str, HalfGraphCert] | None:
        return half_graph_side(self.g)

    @cached_property
    def graph6(self) -> str:
        return to_graph6(self.g)


PATTERNS: dict[str, Callable[[], Graph]] = {
    "P4": catalog.P4,
    "P5": catalog.P5,
    "P5C": catalog.P5C,
    "C4": catalog.C4,
    "2K2": catalog.TWO_K2,
    "C5": catalog.C5,
    "BULL": catalog.BULL,
    "H6": catalog.H6,
}


# -- verdicts -----------------------------------------------------------------------


@dataclass
class Verdict:
    lemma: str
    status: str
    certificate: dict | None = None
    counterwitness: dict | None = None
    precondition: str | None = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    def to_dict(self, labels: Sequence[str] | None = None) -> dict:
        return {
            "lemma": self.lemma,
            "status": self.status,
            "certificate": jsonify(self.certificate, labels),
            "counterwitness": jsonify(self.counterwitness, labels),
            "precondition": self.precondition,
        }


Clause = tuple[str, Callable[[Facts], bool]]


def _free(p: str) -> Clause:
    return (f"{p}-free", lambda f: not f.has(p))


def _contains(p: str) -> Clause:
    return (f"contains {p}", lambda f: f.has(p))


PRIME: Clause = ("prime", lambda f: f.prime)
NON_SPLIT: Clause = ("not split", lambda f: f.split is None)
AT_LEAST_TWO: Clause = ("at least two vertices", lambda f: f.g.n >= 2)
P5_OR_P5C_FREE: Clause = ("P5-free or P5C-free", lambda f: not f.has("P5") or not f.has("P5C"))

CLASS_P5_P5C_C5 = [_free("P5"), _free("P5C"), _free("C5")]


@dataclass(frozen=True)
class Lemma:
    id: str
    kind: str  # "theorem" or "conjecture"
    statement: str
    preconditions: tuple[Clause, ...]
    check: Callable[[Facts, HarnessConfig], tuple[bool, dict]]
    exhaustive_only_small: bool = False

    def precondition_text(self) -> str:
        return ", ".join(c[0] for c in self.preconditions) or "none"


# -- individual checks -----------------------------------------------------------------


def _prime_conn(f: Facts, cfg: HarnessConfig):
    g = f.g
    tree = spanning_tree(g)
    cotree = spanning_tree(g, anti=True)
    if tree is not None and cotree is not None:
        return True, {"spanning_tree": Edges(tuple(tree)), "complement_spanning_tree": Edges(tuple(cotree))}
    if tree is None:
        return False, {"side": "G", "component": VSet(component_masks(g)[0])}
    return False, {"side": "complement", "component": VSet(anticomponent_masks(g)[0])}


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _sand_a(f: Facts, cfg: HarnessConfig):
    if f.simp and f.anti:
        return True, {"simplicial": V(_low(f.simp)), "antisimplicial": V(_low(f.anti))}
    return False, {"simplicial_set": VSet(f.simp), "antisimplicial_set": VSet(f.anti)}


def _a_or_1join(f: Facts, cfg: HarnessConfig):
    if f.anti:
        return True, {"antisimplicial": V(_low(f.anti))}
    oj = find_one_join(f.g, cfg.onejoin_cap)
    if oj is not None:
        return True, {"one_join": oj}
    return False, {"antisimplicial_set": VSet(0), "one_join": None}


def _s_or_a(f: Facts, cfg: HarnessConfig):
    if f.simp:
        return True, {"kind": "simplicial", "vertex": V(_low(f.simp))}
    if f.anti:
        return True, {"kind": "antisimplicial", "vertex": V(_low(f.anti))}
    return False, {"simplicial_set": VSet(0), "antisimplicial_set": VSet(0)}


def submasks(mask: int):
    """All non-empty submasks of ``mask`` in decreasing numeric order."""
    s = mask
    while s:
        yield s
        s = (s - 1) & mask


def _mixed(nb: int, m: int) -> bool:
    return bool(nb & m) and bool(m & ~nb)


def _nbrs_pair(g: Graph, u: int, v: int) -> dict | None:
    """Certificate entry for one non-adjacent pair, or ``None`` if neither outcome holds."""
    common = g.adj[u] & g.adj[v]
    if g.is_clique(common):
        return {"u": V(u), "v": V(v), "outcome": "clique", "common": VSet(common)}
    outside = g.full_mask & ~(g.adj[u] | g.adj[v] | (1 << u) | (1 << v))
    candidates = [a for a in anticomponent_masks(g, common) if a.bit_count() > 1]
    candidates += [a for a in submasks(common) if a.bit_count() > 1 and a not in candidates]
    for a in candidates:
        if not is_anticonnected_mask(g, a):
            continue
        for w in bits(outside):
            if _mixed(g.adj[w], a):
                return {"u": V(u), "v": V(v), "outcome": "mixed", "w": V(w), "A": VSet(a)}
    return None


def _nbrs(f: Facts, cfg: HarnessConfig):
    g = f.g
    entries = []
    for u in range(g.n):
        for v in bits(g.non_neighbors_mask(u) >> (u + 1) << (u + 1)):
            e = _nbrs_pair(g, u, v)
            if e is None:
                return False, {"u": V(u), "v": V(v), "common": VSet(g.adj[u] & g.adj[v])}
            entries.append(e)
    return True, {"pairs": entries}


def _seinsche(f: Facts, cfg: HarnessConfig):
    g = f.g
    comps = component_masks(g)
    if len(comps) > 1:
        return True, {"side": "G", "component": VSet(comps[0])}
    acomps = anticomponent_masks(g)
    if len(acomps) > 1:
        return True, {"side": "complement", "component": VSet(acomps[0])}
    return False, {
        "spanning_tree": Edges(tuple(spanning_tree(g) or ())),
        "complement_spanning_tree": Edges(tuple(spanning_tree(g, anti=True) or ())),
    }


def _prime_has_p4(f: Facts, cfg: HarnessConfig):
    emb = find_induced(f.g, catalog.P4(), "P4")
    if emb is not None:
        return True, {"p4": emb}
    return False, {"p4_free": True}


def _p4_roles(g: Graph) -> tuple[list[Embedding], list[int], list[int], list[int]]:
    """P4 copies plus, per vertex, the number of copies, end appearances and middle appearances."""
    copies = enumerate_induced(g, catalog.P4(), "P4")
    total = [0] * g.n
    ends = [0] * g.n
    mids = [0] * g.n
    for e in copies:
        for i, x in enumerate(e.map):
            total[x] += 1
            if i in (0, 3):
                ends[x] += 1
            else:
                mids[x] += 1
    return copies, total, ends, mids


def _simp_char(f: Facts, cfg: HarnessConfig):
    g = f.g
    copies, total, ends, mids = _p4_roles(g)
    table = []
    for v in range(g.n):
        s = bool(f.simp >> v & 1)
        a = bool(f.anti >> v & 1)
        end_always = ends[v] == total[v]
        mid_always = mids[v] == total[v]
        row = {
            "vertex": V(v),
            "simplicial": s,
            "degree_one_in_every_p4": end_always,
            "antisimplicial": a,
            "degree_two_in_every_p4": mid_always,
            "p4_copies": total[v],
        }
        if s != end_always:
            row["claim"] = "simplicial"
            # A simplicial vertex in the middle of some P4, or a non-simplicial one that never is.
            row["offending_p4"] = next((e for e in copies if v in (e.map[1], e.map[2])), None)
            return False, row
        if a != mid_always:
            row["claim"] = "antisimplicial"
            row["offending_p4"] = next((e for e in copies if v in (e.map[0], e.map[3])), None)
            return False, row
        table.append(row)
    return True, {"vertices": table}


def _aclique(f: Facts, cfg: HarnessConfig):
    g = f.g
    for a in bits(f.anti):
        other = f.anti & ~(1 << a) & ~g.adj[a]
        if other:
            return False, {"kind": "antisimplicial non-edge", "pair": [V(a), V(_low(other))]}
    for s in bits(f.simp):
        other = f.simp & g.adj[s]
        if other:
            return False, {"kind": "simplicial edge", "pair": [V(s), V(_low(other))]}
    return True, {"antisimplicial_set": VSet(f.anti), "simplicial_set": VSet(f.simp)}


def _split_subgraph(f: Facts, cfg: HarnessConfig):
    g = f.g
    union = f.anti | f.simp
    order = list(bits(union))
    h = induced_by_order(g, order)
    cert = find_split_partition(h)
    conn = bool(order) and is_connected_mask(g, union)
    aconn = bool(order) and is_anticonnected_mask(g, union)
    payload = {
        "vertices": VSet(union),
        "partition": None
        if cert is None
        else {"K": VSet.of(order[i] for i in cert.K), "S": VSet.of(order[i] for i in cert.S)},
        "connected": conn,
        "anticonnected": aconn,
    }
    return cert is not None and conn and aconn, payload


def _saas(f: Facts, cfg: HarnessConfig):
    g = f.g
    copies = enumerate_induced(g, catalog.P4(), "P4")
    for e in copies:
        p0, p1, p2, p3 = e.map
        if f.simp >> p0 & 1 and f.simp >> p3 & 1 and f.anti >> p1 & 1 and f.anti >> p2 & 1:
            return True, {"p4": e}
    return False, {"p4_copies": len(copies), "simplicial_set": VSet(f.simp), "antisimplicial_set": VSet(f.anti)}


def _hoang_reed(f: Facts, cfg: HarnessConfig):
    for side, sg in (("G", f.g), ("complement", f.gc)):
        emb = find_induced(sg, catalog.H6(), "H6")
        if emb is not None:
            return True, {"side": side, "h6": emb}
    return False, {"h6_free_both_sides": True}


def h6_witnesses(g: Graph) -> list[H6Witness]:
    """Every induced H6 in G, then in its complement, with both flag conventions."""
    gc = complement(g)
    simp_g, anti_g = simplicial_mask(g), antisimplicial_mask(g)
    out = []
    for side, sg in (("G", g), ("complement", gc)):
        if side == "G":
            simp_s, anti_s = simp_g, anti_g
        else:
            simp_s, anti_s = anti_g, simp_g  # simplicial in the complement == antisimplicial in G
        for e in enumerate_induced(sg, catalog.H6(), "H6"):
            m = e.map
            d1 = (m[0], m[3])
            d3 = (m[1], m[2])
            out.append(
                H6Witness(
                    side,
                    m,
                    all(simp_s >> x & 1 for x in d1),
                    sum(anti_s >> x & 1 for x in d3),
                    all(simp_g >> x & 1 for x in d1),
                    sum(anti_g >> x & 1 for x in d3),
                )
            )
    return out


def _h6_check(required: int):
    def check(f: Facts, cfg: HarnessConfig):
        ws = h6_witnesses(f.g)
        side_ok = [w for w in ws if w.deg1_simplicial and w.deg3_antisimplicial_count >= required]
        g_ok = [w for w in ws if w.g_deg1_simplicial and w.g_deg3_antisimplicial_count >= required]
        if side_ok:
            return True, {
                "witness": side_ok[0],
                "g_convention_witness": g_ok[0] if g_ok else None,
                "copies": len(ws),
            }
        return False, {"copies": ws, "g_convention_witness": g_ok[0] if g_ok else None}

    return check


def _conj_1_6(f: Facts, cfg: HarnessConfig):
    g = f.g
    if g.n == 5:
        phi = are_isomorphic(g, catalog.C5(), cap=cfg.iso_cap)
        if phi is not None:
            return True, {"escape": "isomorphic_to_C5", "bijection": [V(x) for x in phi]}
    if f.split is not None:
        return True, {"escape": "split", "partition": f.split}
    if f.homogeneous is not None:
        return True, {"escape": "homogeneous_set", "homogeneous_set": f.homogeneous}
    oj = find_one_join(g, cfg.onejoin_cap)
    if oj is not None:
        return True, {"escape": "one_join", "side": "G", "one_join": oj}
    oj = find_one_join(f.gc, cfg.onejoin_cap)
    if oj is not None:
        return True, {"escape": "one_join", "side": "complement", "one_join": oj}
    forbidden = None
    for pid in ("C4", "2K2", "C5"):
        forbidden = find_induced(g, PATTERNS[pid](), pid)
        if forbidden is not None:
            break
    return False, {
        "isomorphic_to_C5": False,
        "split": False,
        "split_obstruction": forbidden,
        "homogeneous_set": None,
        "prime": g.n >= 4,
        "one_join_G": None,
        "one_join_complement": None,
    }


def _c5_unique(f: Facts, cfg: HarnessConfig):
    g = f.g
    phi = are_isomorphic(g, catalog.C5(), cap=cfg.iso_cap) if g.n == 5 else None
    if phi is not None:
        return True, {"bijection_to_C5": [V(x) for x in phi]}
    return False, {"n": g.n, "c5": find_induced(g, catalog.C5(), "C5")}


def _obst(f: Facts, cfg: HarnessConfig):
    if f.half is not None:
        side, cert = f.half
        return True, {"side": side, "half_graph": cert}
    return False, {"G_half_graph": False, "complement_half_graph": False}


def _bull_struct(f: Facts, cfg: HarnessConfig):
    g = f.g
    if g.n <= 2:
        return True, {"outcome": "at_most_two_vertices"}
    if g.n == 5:
        phi = are_isomorphic(g, catalog.C5(), cap=cfg.iso_cap)
        if phi is not None:
            return True, {"outcome": "isomorphic_to_C5", "bijection": [V(x) for x in phi]}
    if f.homogeneous is not None:
        return True, {"outcome": "homogeneous_set", "homogeneous_set": f.homogeneous}
    if f.half is not None:
        side, cert = f.half
        return True, {"outcome": "half_graph", "side": side, "half_graph": cert}
    return False, {"n": g.n, "isomorphic_to_C5": False, "homogeneous_set": None, "half_graph": None}


def _split_iff(f: Facts, cfg: HarnessConfig):
    g = f.g
    forbidden = None
    for pid in ("C4", "2K2", "C5"):
        forbidden = find_induced(g, PATTERNS[pid](), pid)
        if forbidden is not None:
            break
    agree = (f.split is not None) == (forbidden is None)
    return agree, {"partition": f.split, "forbidden": forbidden}


# -- mixed-set lemmas (quantified over configurations) -----------------------------------


def _anticomplete(g: Graph, x1: int, x2: int) -> bool:
    return not any(g.adj[x] & x2 for x in bits(x1))


def _complete(g: Graph, x1: int, x2: int) -> bool:
    return all((g.adj[x] & x2) == x2 for x in bits(x1))


def _rng(cfg: HarnessConfig, f: Facts, tag: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{f.graph6}:{tag}")


def _mixed_pair(f: Facts, cfg: HarnessConfig):
    g = f.g
    forms = []
    if not f.has("P5"):
        forms.append(("connected, anticomplete", g))
    if not f.has("P5C"):
        forms.append(("anticonnected, complete", f.gc))
    exhaustive = g.n <= cfg.mixed_exhaustive_max_n
    checked = 0
    for form, h in forms:
        # The co-form in G is the plain form in the complement; mixedness is complement-invariant.
        if exhaustive:
            for v in range(h.n):
                rest = h.full_mask & ~(1 << v)
                conn = [x for x in submasks(rest) if is_connected_mask(h, x)]
                for i, x1 in enumerate(conn):
                    for x2 in conn[i + 1 :]:
                        if x1 & x2 or not _anticomplete(h, x1, x2):
                            continue
                        checked += 1
                        if _mixed(h.adj[v], x1) and _mixed(h.adj[v], x2):
                            return False, {"form": form, "v": V(v), "X1": VSet(x1), "X2": VSet(x2)}
        else:
            rng = _rng(cfg, f, "MIXED_PAIR" + form)
            for _ in range(cfg.mixed_samples):
                v = rng.randrange(h.n)
                x1 = x2 = 0
                for u in range(h.n):
                    if u != v:
                        r = rng.randrange(3)
                        if r == 1:
                            x1 |= 1 << u
                        elif r == 2:
                            x2 |= 1 << u
                if not (x1 and x2 and is_connected_mask(h, x1) and is_connected_mask(h, x2)):
                    continue
                if not _anticomplete(h, x1, x2):
                    continue
                checked += 1
                if _mixed(h.adj[v], x1) and _mixed(h.adj[v], x2):
                    return False, {"form": form, "v": V(v), "X1": VSet(x1), "X2": VSet(x2)}
    return True, {"mode": "exhaustive" if exhaustive else "sampled", "configurations": checked}


def _mixed3(f: Facts, cfg: HarnessConfig):
    g = f.g
    exhaustive = g.n <= cfg.mixed_exhaustive_max_n
    checked = 0

    def probe(u: int, v: int, a: int) -> dict | None:
        nonlocal checked
        uv = (1 << u) | (1 << v)
        for w in bits(g.full_mask & ~(a | uv)):
            checked += 1
            if _mixed(g.adj[w], a) and _mixed(g.adj[w], uv):
                return {"u": V(u), "v": V(v), "A": VSet(a), "w": V(w)}
        return None

    if exhaustive:
        for u in range(g.n):
            for v in bits(g.non_neighbors_mask(u) >> (u + 1) << (u + 1)):
                for a in submasks(g.adj[u] & g.adj[v]):
                    if is_anticonnected_mask(g, a):
                        bad = probe(u, v, a)
                        if bad:
                            return False, bad
    else:
        rng = _rng(cfg, f, "MIXED3")
        pairs = [(u, v) for u in range(g.n) for v in bits(g.non_neighbors_mask(u)) if u < v]
        for _ in range(cfg.mixed_samples if pairs else 0):
            u, v = rng.choice(pairs)
            common = list(bits(g.adj[u] & g.adj[v]))
            a = to_mask(x for x in common if rng.random() < 0.5)
            if a and is_anticonnected_mask(g, a):
                bad = probe(u, v, a)
                if bad:
                    return False, bad
    return True, {"mode": "exhaustive" if exhaustive else "sampled", "configurations": checked}


def _mixed4(f: Facts, cfg: HarnessConfig):
    g = f.g
    exhaustive = g.n <= cfg.mixed_exhaustive_max_n
    checked = 0

    def probe(u: int, v: int, w: int, a: int) -> dict | None:
        nonlocal checked
        uv = (1 << u) | (1 << v)
        for z in bits(g.adj[w] & ~(a | uv)):
            checked += 1
            if _mixed(g.adj[z], uv):
                return {"u": V(u), "v": V(v), "w": V(w), "A": VSet(a), "z": V(z)}
        return None

    def triples():
        for u in range(g.n):
            for v in bits(g.non_neighbors_mask(u) >> (u + 1) << (u + 1)):
                for w in bits(g.non_neighbors_mask(u) & g.non_neighbors_mask(v)):
                    yield u, v, w

    if exhaustive:
        for u, v, w in triples():
            for a in submasks(g.adj[u] & g.adj[v]):
                if _mixed(g.adj[w], a) and is_anticonnected_mask(g, a):
                    bad = probe(u, v, w, a)
                    if bad:
                        return False, bad
    else:
        rng = _rng(cfg, f, "MIXED4")
        ts = list(triples())
        for _ in range(cfg.mixed_samples if ts else 0):
            u, v, w = rng.choice(ts)
            common = list(bits(g.adj[u] & g.adj[v]))
            a = to_mask(x for x in common if rng.random() < 0.5)
            if a and _mixed(g.adj[w], a) and is_anticonnected_mask(g, a):
                bad = probe(u, v, w, a)
                if bad:
                    return False, bad
    return True, {"mode": "exhaustive" if exhaustive else "sampled", "configurations": checked}


# -- lemma table -------------------------------------------------------------------------

_PRIME_CLASS = (PRIME, *CLASS_P5_P5C_C5)

LEMMAS: dict[str, Lemma] = {
    lem.id: lem
    for lem in [
        Lemma("PRIME_CONN", "theorem", "a prime graph is connected and anticonnected", (PRIME,), _prime_conn),
        Lemma("SAND_A", "theorem", "has both a simplicial and an antisimplicial vertex", _PRIME_CLASS, _sand_a),
        Lemma("A_OR_1JOIN", "theorem", "has an antisimplicial vertex or admits a 1-join", _PRIME_CLASS, _a_or_1join),
        Lemma("S_OR_A", "theorem", "has a simplicial or an antisimplicial vertex", _PRIME_CLASS, _s_or_a),
        Lemma(
            "NBRS",
            "theorem",
            "for non-adjacent u, v: N(u)∩N(v) is a clique or some w anticomplete to {u,v} "
            "is mixed on an anticonnected subset of it",
            (PRIME, _free("P5C")),
            _nbrs,
        ),
        Lemma(
            "SEINSCHE",
            "theorem",
            "a P4-free graph with at least two vertices is not connected or not anticonnected",
            (_free("P4"), AT_LEAST_TWO),
            _seinsche,
        ),
        Lemma("PRIME_HAS_P4", "theorem", "every prime graph contains P4", (PRIME,), _prime_has_p4),
        Lemma(
            "SIMP_CHAR",
            "theorem",
            "simplicial iff an end of every P4 through it; antisimplicial iff a middle of every P4 through it",
            (PRIME,),
            _simp_char,
        ),
        Lemma(
            "ACLIQUE",
            "theorem",
            "antisimplicial vertices form a clique and simplicial vertices a stable set",
            (PRIME,),
            _aclique,
        ),
        Lemma(
            "SPLIT_SUBGRAPH",
            "theorem",
            "G[A ∪ S] is split, connected and anticonnected",
            _PRIME_CLASS,
            _split_subgraph,
        ),
        Lemma(
            "SAAS",
            "theorem",
            "some P4 has simplicial ends and antisimplicial middle vertices",
            _PRIME_CLASS,
            _saas,
        ),
        Lemma(
            "HOANG_REED",
            "theorem",
            "G or its complement contains H6",
            (*_PRIME_CLASS, NON_SPLIT),
            _hoang_reed,
        ),
        Lemma(
            "H6_CONJ",
            "conjecture",
            "some H6 in G or its complement has simplicial degree-one and antisimplicial degree-three vertices",
            (*_PRIME_CLASS, NON_SPLIT),
            _h6_check(2),
        ),
        Lemma(
            "H6_WEAK",
            "theorem",
            "some H6 in G or its complement has simplicial degree-one vertices and at least one "
            "antisimplicial degree-three vertex",
            (*_PRIME_CLASS, NON_SPLIT),
            _h6_check(1),
        ),
        Lemma(
            "CONJ_1_6",
            "conjecture",
            "G is C5, split, has a homogeneous set, or G or its complement admits a 1-join",
            (_free("P5"), _free("P5C")),
            _conj_1_6,
        ),
        Lemma(
            "C5_UNIQUE",
            "theorem",
            "a prime {P5, P5C}-free graph containing C5 is C5",
            (PRIME, _free("P5"), _free("P5C"), _contains("C5")),
            _c5_unique,
        ),
        Lemma(
            "OBST",
            "theorem",
            "G or its complement is a half graph",
            (*_PRIME_CLASS, _free("BULL")),
            _obst,
        ),
        Lemma(
            "BULL_STRUCT",
            "theorem",
            "|V| <= 2, or G is C5, or G has a homogeneous set, or G or its complement is a half graph",
            (_free("P5"), _free("P5C"), _free("BULL")),
            _bull_struct,
        ),
        Lemma(
            "SPLIT_IFF",
            "theorem",
            "G has a clique/stable partition iff G is {C4, 2K2, C5}-free",
            (),
            _split_iff,
        ),
        Lemma(
            "MIXED_PAIR",
            "theorem",
            "no vertex is mixed on two disjoint connected anticomplete sets (P5-free), "
            "nor on two anticonnected complete sets (P5C-free)",
            (P5_OR_P5C_FREE,),
            _mixed_pair,
            exhaustive_only_small=True,
        ),
        Lemma(
            "MIXED3",
            "theorem",
            "for non-adjacent u, v and anticonnected A ⊆ N(u)∩N(v), no w is mixed on both A and {u,v}",
            (_free("P5C"),),
            _mixed3,
            exhaustive_only_small=True,
        ),
        Lemma(
            "MIXED4",
            "theorem",
            "if w is mixed on an anticonnected A ⊆ N(u)∩N(v) (u, v, w pairwise non-adjacent), "
            "no neighbour of w outside A ∪ {u,v} is mixed on {u,v}",
            (_free("P5"), _free("P5C")),
            _mixed4,
            exhaustive_only_small=True,
        ),
    ]
}

LEMMA_IDS: tuple[str, ...] = tuple(LEMMAS)
CONJECTURES = frozenset(k for k, v in LEMMAS.items() if v.kind == "conjecture")

# Lemmas that must show zero failures in the exhaustive small-graph sweep.
SWEEP_THEOREMS: tuple[str, ...] = (
    "PRIME_CONN", "SAND_A", "A_OR_1JOIN", "S_OR_A", "NBRS", "SEINSCHE", "PRIME_HAS_P4",
    "SIMP_CHAR", "ACLIQUE", "SPLIT_SUBGRAPH", "SAAS", "HOANG_REED", "H6_WEAK", "C5_UNIQUE",
    "OBST", "BULL_STRUCT", "SPLIT_IFF",
)  # fmt: skip


def resolve_lemma(name: str) -> str:
    """Map user spellings (``h6conj``, ``h6_conj``, ``H6-CONJ``) to a lemma id."""
    key = name.strip().upper().replace("-", "").replace("_", "")
    for lid in LEMMA_IDS:
        if lid.replace("_", "") == key:
            return lid
    raise KeyError(f"unknown lemma {name!r}; known: {', '.join(LEMMA_IDS)}")


def resolve_lemmas(spec: str | Iterable[str]) -> list[str]:
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    out: list[str] = []
    for item in items:
        item = item.strip()
        if not item:
            continue
        if item.lower() == "all":
            out.extend(x for x in LEMMA_IDS if x not in out)
        elif item.lower() == "theorems":
            out.extend(x for x in SWEEP_THEOREMS if x not in out)
        else:
            lid = resolve_lemma(item)
            if lid not in out:
                out.append(lid)
    return out


def check_lemma(
    lemma_id: str, g: Graph, config: HarnessConfig | None = None, facts: Facts | None = None
) -> Verdict:
    """Evaluate one lemma on ``g``."""
    lemma = LEMMAS[resolve_lemma(lemma_id)]
    cfg = config or HarnessConfig()
    f = facts if facts is not None else Facts(g)
    for text, pred in lemma.preconditions:
        if not pred(f):
            return Verdict(lemma.id, PRECONDITION_NOT_MET, precondition=f"not {text}")
    ok, payload = lemma.check(f, cfg)
    if ok:
        return Verdict(lemma.id, HOLDS, certificate=payload, precondition=lemma.precondition_text())
    return Verdict(lemma.id, FAILS, counterwitness=payload, precondition=lemma.precondition_text())


def check_lemmas(g: Graph, lemma_ids: Iterable[str], config: HarnessConfig | None = None) -> list[Verdict]:
    f = Facts(g)
    return [check_lemma(lid, g, config, f) for lid in lemma_ids]


# -- constructive finders -----------------------------------------------------------------


def _require_prime_p5_class(g: Graph) -> list[str]:
    f = Facts(g)
    failed = []
    if not f.prime:
        failed.append("G is not prime")
    if f.has("P5"):
        failed.append("G contains P5")
    if f.has("P5C"):
        failed.append("G contains P5C")
    return failed


def find_simplicial_from_antisimplicial(g: Graph, a: int, *, check_class: bool = True) -> int:
    """Among non-neighbours ``u`` of antisimplicial ``a``, the one minimising
    ``|N(a) ∩ N(u)|`` (lowest index on ties); it is simplicial in the class."""
    failed = _require_prime_p5_class(g) if check_class else []
    if not g.is_stable(g.non_neighbors_mask(a)):
        failed.append(f"vertex {a + 1} is not antisimplicial")
    non = g.non_neighbors_mask(a)
    if not non:
        failed.append(f"vertex {a + 1} is complete to the rest of G")
    if failed:
        raise PreconditionError(failed)
    u = min(bits(non), key=lambda x: ((g.adj[a] & g.adj[x]).bit_count(), x))
    if not g.is_clique(g.adj[u]):
        raise TheoremViolation(
            "argmin non-neighbour of an antisimplicial vertex is not simplicial",
            {"graph6": to_graph6(g), "a": a, "u": u},
        )
    return u


def find_antisimplicial_from_simplicial(g: Graph, s: int, *, check_class: bool = True) -> int:
    """Among neighbours ``u`` of simplicial ``s``, the one maximising
    ``|N(u) ∪ N(s)|`` (lowest index on ties); it is antisimplicial in the class."""
    failed = _require_prime_p5_class(g) if check_class else []
    if not g.is_clique(g.adj[s]):
        failed.append(f"vertex {s + 1} is not simplicial")
    if not g.adj[s]:
        failed.append(f"vertex {s + 1} is isolated")
    if failed:
        raise PreconditionError(failed)
    u = min(bits(g.adj[s]), key=lambda x: (-(g.adj[x] | g.adj[s]).bit_count(), x))
    if not g.is_stable(g.non_neighbors_mask(u)):
        raise TheoremViolation(
            "argmax neighbour of a simplicial vertex is not antisimplicial",
            {"graph6": to_graph6(g), "s": s, "u": u},
        )
    return u


def grow_prime_subgraph(g: Graph, h: Graph) -> tuple[Embedding, int]:
    """Find an induced copy ``H'`` of ``h`` and an outside vertex ``v`` with
    ``G[V(H') ∪ {v}]`` prime.

    Raises ``PreconditionError`` naming each failed hypothesis, and
    ``TheoremViolation`` if no such pair exists although every hypothesis holds.
    """
    failed = []
    if not is_prime(g):
        failed.append("G is not prime")
    if not is_prime(h):
        failed.append("H is not prime")
    if h.n >= g.n or not contains(g, h):
        failed.append("H is not isomorphic to a proper induced subgraph of G")
    half = half_graph_side(g)
    if half is not None:
        failed.append("G is a half graph" if half[0] == "G" else "the complement of G is a half graph")
    if failed:
        raise PreconditionError(failed)
    for emb in enumerate_induced(g, h):
        base = to_mask(emb.map)
        for v in bits(g.full_mask & ~base):
            if is_prime(induced_by_order(g, list(bits(base | (1 << v))))):
                return emb, v
    raise TheoremViolation(
        "no prime one-vertex extension of any copy of H", {"graph6": to_graph6(g), "H": to_graph6(h)}
    )


# -- one-vertex extensions -------------------------------------------------------------------


@dataclass
class Extension:
    """``H`` plus a new vertex ``v`` attached to ``attachment``; ``v`` is the last vertex."""

    base: str
    attachment: tuple[str, ...]
    graph: Graph
    prime: bool
    contains: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, Embedding | None] = field(default_factory=dict)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"v{i}" for i in range(1, self.graph.n)) + ("v",)

    def to_dict(self, labels=None) -> dict:
        return {
            "base": self.base,
            "attachment": list(self.attachment),
            "prime": self.prime,
            "contains": dict(self.contains),
            "witnesses": {k: (w.to_dict(self.labels) if w else None) for k, w in self.witnesses.items()},
        }


EXTENSION_PATTERNS = ("P5", "P5C", "C5", "BULL")


def one_vertex_extensions_of(h: str | catalog.NamedGraph) -> list[Extension]:
    """Classify ``H + v`` for every attachment set ``S ⊆ V(H)`` (``H`` is C5 or P4).

    Vertices of ``H`` are named ``v1..vk`` along the cycle/path; the new vertex is ``v``.
    """
    ng = catalog.get(h) if isinstance(h, str) else h
    if ng.id not in ("C5", "P4"):
        raise ValueError(f"one-vertex extensions are only tabulated for C5 and P4, not {ng.id}")
    base = ng.graph
    k = base.n
    out = []
    for s in range(1 << k):
        adj = [a | ((s >> i & 1) << k) for i, a in enumerate(base.adj)] + [s]
        g = Graph(k + 1, adj, validate=False)
        ext = Extension(ng.id, tuple(f"v{i + 1}" for i in bits(s)), g, is_prime(g))
        gc = complement(g)
        for pid in EXTENSION_PATTERNS:
            w = find_induced(gc, catalog.P5(), pid) if pid == "P5C" else find_induced(g, PATTERNS[pid](), pid)
            ext.contains[pid] = w is not None
            ext.witnesses[pid] = w
        out.append(ext)
    return out


def induces(g: Graph, vertices: Sequence[int], pattern: Graph) -> bool:
    """Whether ``G[vertices]`` is isomorphic to ``pattern``."""
    return are_isomorphic(induced_by_order(g, list(vertices)), pattern) is not None
