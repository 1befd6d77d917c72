"""Certificate-producing recognizers for the structural notions of the package.

Vertex sets are accepted as any iterable of ints; internally everything is a
bitmask.  Each certificate type has a ``validate(G)`` method that re-checks
it from the definition alone, independently of the routine that built it.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from . import catalog
from .graph import (
    CapabilityError,
    Graph,
    GraphError,
    bits,
    complement,
    component_masks,
    is_anticonnected_mask,
    is_connected_mask,
    to_mask,
)
from .patterns import contains

ONEJOIN_CAP = 24


def _mask(x: Iterable[int] | int) -> int:
    return x if isinstance(x, int) else to_mask(x)


def _names(mask: int, labels=None) -> list:
    return [labels[v] if labels else v + 1 for v in bits(mask)]


# -- certificates -------------------------------------------------------------


@dataclass(frozen=True)
class HomogeneousSetCert:
    X: frozenset[int]

    def validate(self, g: Graph) -> bool:
        m = to_mask(self.X)
        if not 1 < len(self.X) < g.n or m & ~g.full_mask:
            return False
        return not any(_mixed(g.adj[w], m) for w in bits(g.full_mask & ~m))

    def to_dict(self, labels=None) -> dict:
        return {"type": "HomogeneousSet", "X": _names(to_mask(self.X), labels)}


@dataclass(frozen=True)
class OneJoinCert:
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    D: frozenset[int]

    def validate(self, g: Graph) -> bool:
        a, b, c, d = (to_mask(s) for s in (self.A, self.B, self.C, self.D))
        if not (a and b and c and d):
            return False
        if a & b or a & c or a & d or b & c or b & d or c & d or (a | b | c | d) != g.full_mask:
            return False
        for v in bits(a):
            if g.adj[v] & (c | d):
                return False
        for v in bits(b):
            if (g.adj[v] & c) != c or g.adj[v] & d:
                return False
        return True

    def to_dict(self, labels=None) -> dict:
        return {
            "type": "OneJoin",
            **{k: _names(to_mask(getattr(self, k)), labels) for k in "ABCD"},
        }


@dataclass(frozen=True)
class SplitPartitionCert:
    K: frozenset[int]
    S: frozenset[int]

    def validate(self, g: Graph) -> bool:
        k, s = to_mask(self.K), to_mask(self.S)
        return not (k & s) and (k | s) == g.full_mask and g.is_clique(k) and g.is_stable(s)

    def to_dict(self, labels=None) -> dict:
        return {"type": "SplitPartition", "K": _names(to_mask(self.K), labels), "S": _names(to_mask(self.S), labels)}


@dataclass(frozen=True)
class HalfGraphCert:
    k: int
    a_order: tuple[int, ...]
    b_order: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        k = self.k
        if k < 1 or len(self.a_order) != k or len(self.b_order) != k:
            return False
        if sorted(self.a_order + self.b_order) != list(range(g.n)):
            return False
        for i in range(k):
            for j in range(k):
                if g.has_edge(self.a_order[i], self.b_order[j]) != (i + j + 2 >= k + 1):
                    return False
        return g.is_stable(to_mask(self.a_order)) and g.is_stable(to_mask(self.b_order))

    def to_dict(self, labels=None) -> dict:
        name = (lambda v: labels[v]) if labels else (lambda v: v + 1)
        return {
            "type": "HalfGraphOrdering",
            "k": self.k,
            "a_order": [name(v) for v in self.a_order],
            "b_order": [name(v) for v in self.b_order],
        }


@dataclass(frozen=True)
class MixedWitness:
    v: int
    x: int
    y: int
    kind: str  # "edge" or "non-edge"

    def validate(self, g: Graph, X: Iterable[int] | int) -> bool:
        m = _mask(X)
        if m >> self.v & 1:
            return False
        if not (m >> self.x & 1 and m >> self.y & 1) or self.x == self.y:
            return False
        if g.has_edge(self.x, self.y) != (self.kind == "edge"):
            return False
        return g.has_edge(self.v, self.x) and not g.has_edge(self.v, self.y)


# -- mixed vertices and homogeneous sets --------------------------------------


def _mixed(nb: int, m: int) -> bool:
    return bool(nb & m) and bool(m & ~nb)


def is_mixed_on(g: Graph, v: int, X: Iterable[int] | int) -> bool:
    """True iff ``v`` has both a neighbour and a non-neighbour in ``X``."""
    m = _mask(X)
    if m >> v & 1:
        raise GraphError(f"vertex {v} belongs to X")
    if not m:
        raise GraphError("X must be non-empty")
    return _mixed(g.adj[v], m)


def mixed_witness(g: Graph, v: int, X: Iterable[int] | int, require: str = "edge") -> MixedWitness | None:
    """A pair ``x, y`` of ``X`` (adjacent for ``require='edge'``, else non-adjacent)
    with ``v`` adjacent to ``x`` and not to ``y``; ``None`` when there is none."""
    if require not in ("edge", "non-edge"):
        raise ValueError("require must be 'edge' or 'non-edge'")
    m = _mask(X)
    if m >> v & 1:
        raise GraphError(f"vertex {v} belongs to X")
    nb = g.adj[v]
    for x in bits(m & nb):
        pool = m & ~nb & (g.adj[x] if require == "edge" else ~g.adj[x] & ~(1 << x))
        if pool:
            y = (pool & -pool).bit_length() - 1
            return MixedWitness(v, x, y, require)
    return None


def _closure_mask(g: Graph, m: int) -> int:
    full = g.full_mask
    adj = g.adj
    while True:
        add = 0
        for w in bits(full & ~m):
            a = adj[w]
            if a & m and m & ~a:
                add |= 1 << w
        if not add:
            return m
        m |= add


def homogeneous_closure(g: Graph, u: int, v: int) -> frozenset[int]:
    """Smallest set containing ``u`` and ``v`` on which no outside vertex is mixed."""
    if u == v:
        raise GraphError("closure needs two distinct vertices")
    return frozenset(bits(_closure_mask(g, (1 << u) | (1 << v))))


def find_homogeneous_set_mask(g: Graph) -> int:
    n = g.n
    full = g.full_mask
    for u in range(n):
        for v in range(u + 1, n):
            m = _closure_mask(g, (1 << u) | (1 << v))
            if m != full:
                return m
    return 0


def find_homogeneous_set(g: Graph) -> HomogeneousSetCert | None:
    """First proper pair-closure in lexicographic pair order, if any."""
    m = find_homogeneous_set_mask(g)
    return HomogeneousSetCert(frozenset(bits(m))) if m else None


def is_prime(g: Graph) -> bool:
    return g.n >= 4 and not find_homogeneous_set_mask(g)


# -- simplicial / antisimplicial ----------------------------------------------


def is_simplicial(g: Graph, v: int) -> bool:
    return g.is_clique(g.adj[v])


def is_antisimplicial(g: Graph, v: int) -> bool:
    return g.is_stable(g.non_neighbors_mask(v))


def simplicial_mask(g: Graph) -> int:
    m = 0
    for v in range(g.n):
        if g.is_clique(g.adj[v]):
            m |= 1 << v
    return m


def antisimplicial_mask(g: Graph) -> int:
    m = 0
    for v in range(g.n):
        if g.is_stable(g.non_neighbors_mask(v)):
            m |= 1 << v
    return m


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(bits(simplicial_mask(g)))


def antisimplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(bits(antisimplicial_mask(g)))


# -- split graphs ---------------------------------------------------------------


def find_split_partition(g: Graph) -> SplitPartitionCert | None:
    """Clique/stable partition from the degree-ordered greedy construction.

    Vertices are sorted by non-increasing degree and ``m`` is the largest
    index with ``d_m >= m - 1``; the first ``m`` vertices are the clique
    candidate.  The split point is also tried one step either side, and any
    candidate is returned only after it validates.
    """
    n = g.n
    if n == 0:
        return SplitPartitionCert(frozenset(), frozenset())
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = max((i for i in range(1, n + 1) if degs[i - 1] >= i - 1), default=0)
    for cut in (m, m - 1, m + 1):
        if not 0 <= cut <= n:
            continue
        k = to_mask(order[:cut])
        s = g.full_mask & ~k
        if g.is_clique(k) and g.is_stable(s):
            return SplitPartitionCert(frozenset(bits(k)), frozenset(bits(s)))
    return None


def is_split_by_forbidden(g: Graph) -> bool:
    return not (contains(g, catalog.C4()) or contains(g, catalog.TWO_K2()) or contains(g, catalog.C5()))


# -- 1-joins ----------------------------------------------------------------------


def find_one_join_mask(g: Graph, cap: int = ONEJOIN_CAP) -> tuple[int, int, int, int] | None:
    n = g.n
    if n > cap:
        raise CapabilityError(f"1-join scan capped at {cap} vertices (got {n}); skip this graph")
    full = g.full_mask
    adj = g.adj
    for x in range(1, full):
        out = full & ~x
        b = 0
        c = 0
        ok = True
        for v in bits(x):
            seen = adj[v] & out
            if seen:
                if c and seen != c:
                    ok = False
                    break
                c = seen
                b |= 1 << v
        if not ok or not b:
            continue
        a = x & ~b
        d = out & ~c
        if a and d:
            return a, b, c, d
    return None


def find_one_join(g: Graph, cap: int = ONEJOIN_CAP) -> OneJoinCert | None:
    """Exhaustive scan over the side ``X = A ∪ B`` of a 1-join.

    ``B`` is the part of ``X`` with neighbours outside, ``C`` the outside
    vertices seen from ``X``; the scan accepts when every member of ``B`` sees
    exactly ``C`` and both ``A`` and ``D`` are non-empty.
    """
    r = find_one_join_mask(g, cap)
    if r is None:
        return None
    return OneJoinCert(*(frozenset(bits(s)) for s in r))


# -- half graphs ------------------------------------------------------------------


def _two_colouring(g: Graph) -> list[int] | None:
    colour = [-1] * g.n
    for comp in component_masks(g):
        s = (comp & -comp).bit_length() - 1
        colour[s] = 0
        queue = [s]
        for v in queue:
            for u in bits(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    return colour


def find_half_graph_cert(g: Graph) -> HalfGraphCert | None:
    """Recognise ``O_k`` and return the ordering ``a_1..a_k``, ``b_1..b_k``."""
    n = g.n
    if n == 0 or n % 2 or not is_connected_mask(g, g.full_mask):
        return None
    k = n // 2
    colour = _two_colouring(g)
    if colour is None:
        return None
    side_a = [v for v in range(n) if colour[v] == 0]
    side_b = [v for v in range(n) if colour[v] == 1]
    if len(side_a) != k:
        return None
    want = list(range(1, k + 1))
    for side in (side_a, side_b):
        if sorted(g.degree(v) for v in side) != want:
            return None
    a_order = tuple(sorted(side_a, key=g.degree))
    b_order = tuple(sorted(side_b, key=g.degree))
    cert = HalfGraphCert(k, a_order, b_order)
    return cert if cert.validate(g) else None


def half_graph_side(g: Graph) -> tuple[str, HalfGraphCert] | None:
    """``('G', cert)`` or ``('complement', cert)`` if G or its complement is a half graph."""
    cert = find_half_graph_cert(g)
    if cert is not None:
        return "G", cert
    cert = find_half_graph_cert(complement(g))
    if cert is not None:
        return "complement", cert
    return None


def is_connected_set(g: Graph, X: Iterable[int] | int) -> bool:
    return is_connected_mask(g, _mask(X))


def is_anticonnected_set(g: Graph, X: Iterable[int] | int) -> bool:
    return is_anticonnected_mask(g, _mask(X))
