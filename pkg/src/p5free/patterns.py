"""Induced copies of small pattern graphs."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .graph import CapabilityError, Graph, bits

PATTERN_CAP = 8


@dataclass(frozen=True)
class Embedding:
    """``map[i]`` is the host vertex playing pattern vertex ``i``."""

    pattern: Graph
    map: tuple[int, ...]
    pattern_id: str | None = None

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.map))

    def validate(self, host: Graph) -> bool:
        """Re-check injectivity and the induced condition pair by pair."""
        k = self.pattern.n
        if len(self.map) != k or len(set(self.map)) != k:
            return False
        if any(not 0 <= x < host.n for x in self.map):
            return False
        for i in range(k):
            for j in range(i + 1, k):
                if self.pattern.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]):
                    return False
        return True

    def to_dict(self, labels: Sequence[str] | None = None) -> dict:
        name = (lambda v: labels[v]) if labels else (lambda v: v + 1)
        return {
            "pattern": self.pattern_id,
            "map": [name(v) for v in self.map],
            "image": [name(v) for v in self.image],
        }


class _Plan:
    """Search order and per-step constraints for one (host, pattern) pair."""

    __slots__ = ("k", "order", "back", "cand0")

    def __init__(self, host: Graph, pattern: Graph) -> None:
        k = pattern.n
        if k > PATTERN_CAP:
            raise CapabilityError(f"pattern has {k} vertices; cap is {PATTERN_CAP}")
        pdeg = pattern.degrees()
        # Connected-first order: each next vertex is adjacent to an earlier one when possible.
        order: list[int] = []
        left = set(range(k))
        while left:
            touching = [v for v in left if any(pattern.has_edge(v, u) for u in order)]
            pool = touching or list(left)
            v = max(pool, key=lambda x: (pdeg[x], -x))
            order.append(v)
            left.discard(v)
        self.k = k
        self.order = order
        self.back = [[(j, pattern.has_edge(order[i], order[j])) for j in range(i)] for i in range(k)]
        hdeg = host.degrees()
        n = host.n
        self.cand0 = []
        for p in order:
            need_in, need_out = pdeg[p], k - 1 - pdeg[p]
            m = 0
            for v in range(n):
                if hdeg[v] >= need_in and n - 1 - hdeg[v] >= need_out:
                    m |= 1 << v
            self.cand0.append(m)


def _search(host: Graph, pattern: Graph, first_only: bool) -> Iterator[tuple[int, ...]]:
    plan = _Plan(host, pattern)
    k = plan.k
    if k == 0:
        yield ()
        return
    if k > host.n:
        return
    adj = host.adj
    full = host.full_mask
    nonadj = [full & ~a & ~(1 << v) for v, a in enumerate(adj)]
    chosen = [0] * k
    order, back, cand0 = plan.order, plan.back, plan.cand0

    def rec(i: int, used: int) -> Iterator[None]:
        cand = cand0[i] & ~used
        for j, is_edge in back[i]:
            cand &= adj[chosen[j]] if is_edge else nonadj[chosen[j]]
            if not cand:
                return
        last = i == k - 1
        for v in bits(cand):
            chosen[i] = v
            if last:
                yield None
            else:
                yield from rec(i + 1, used | (1 << v))

    for _ in rec(0, 0):
        out = [0] * k
        for i, p in enumerate(order):
            out[p] = chosen[i]
        yield tuple(out)
        if first_only:
            return


def contains(host: Graph, pattern: Graph) -> bool:
    for _ in _search(host, pattern, True):
        return True
    return False


def find_induced(host: Graph, pattern: Graph, pattern_id: str | None = None) -> Embedding | None:
    """Some induced copy of ``pattern`` in ``host``, or ``None`` if host is pattern-free."""
    for m in _search(host, pattern, True):
        return Embedding(pattern, m, pattern_id)
    return None


def enumerate_induced(host: Graph, pattern: Graph, pattern_id: str | None = None) -> list[Embedding]:
    """Every induced copy of ``pattern``, once per image set.

    Two embeddings with the same image differ by an automorphism of the
    pattern, so the image set identifies a copy.  Copies are ordered by sorted
    image; each is represented by its lexicographically smallest map.
    """
    best: dict[tuple[int, ...], tuple[int, ...]] = {}
    for m in _search(host, pattern, False):
        img = tuple(sorted(m))
        cur = best.get(img)
        if cur is None or m < cur:
            best[img] = m
    return [Embedding(pattern, best[img], pattern_id) for img in sorted(best)]


def count_induced(host: Graph, pattern: Graph) -> int:
    return len({tuple(sorted(m)) for m in _search(host, pattern, False)})


def is_free(
    host: Graph, patterns: Sequence[Graph], pattern_ids: Sequence[str] | None = None
) -> tuple[bool, Embedding | None]:
    """``(True, None)`` if no pattern embeds; otherwise ``(False, witness)``.

    The witness is for the first embedding pattern in list order and has the
    lexicographically smallest sorted image among its copies.
    """
    for idx, p in enumerate(patterns):
        if contains(host, p):
            pid = pattern_ids[idx] if pattern_ids else None
            return False, enumerate_induced(host, p, pid)[0]
    return True, None
