"""Isomorphism testing and canonical forms for small graphs.

The two routines are deliberately independent so each can serve as a check on
the other: ``are_isomorphic`` is a plain backtracking search over vertices
grouped by a degree invariant, while ``canonical_form`` runs colour
refinement with individualisation and keeps the lexicographically largest
relabelled adjacency found at the leaves.
"""

from __future__ import annotations

from .graph import CapabilityError, Graph, bits, relabel

DEFAULT_ISO_CAP = 16
DEFAULT_CANON_CAP = 10

CanonicalForm = bytes


def _invariant(g: Graph, v: int, degs: list[int]) -> tuple:
    return (degs[v], tuple(sorted(degs[u] for u in bits(g.adj[v]))))


def are_isomorphic(g: Graph, h: Graph, *, cap: int = DEFAULT_ISO_CAP) -> list[int] | None:
    """Return a bijection ``phi`` (as a list) with ``u~v in g <=> phi[u]~phi[v] in h``.

    Returns ``None`` when the graphs are not isomorphic.
    """
    if max(g.n, h.n) > cap:
        raise CapabilityError(f"isomorphism test capped at {cap} vertices (got {max(g.n, h.n)})")
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    n = g.n
    if n == 0:
        return []
    dg, dh = g.degrees(), h.degrees()
    inv_g = [_invariant(g, v, dg) for v in range(n)]
    inv_h = [_invariant(h, v, dh) for v in range(n)]
    if sorted(inv_g) != sorted(inv_h):
        return None
    classes: dict[tuple, int] = {}
    for v in range(n):
        classes[inv_h[v]] = classes.get(inv_h[v], 0) | (1 << v)

    # Rarest class first, then grow along edges so adjacency constraints bite early.
    size = {key: mask.bit_count() for key, mask in classes.items()}
    order: list[int] = []
    placed = 0
    while len(order) < n:
        frontier = [v for v in range(n) if not placed >> v & 1 and any(g.adj[v] >> u & 1 for u in order)]
        pool = frontier or [v for v in range(n) if not placed >> v & 1]
        v = min(pool, key=lambda x: (size[inv_g[x]], x))
        order.append(v)
        placed |= 1 << v

    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        cand = classes[inv_g[v]] & ~used
        for j in range(i):
            w = order[j]
            if g.adj[v] >> w & 1:
                cand &= h.adj[phi[w]]
            else:
                cand &= ~h.adj[phi[w]]
            if not cand:
                return False
        for x in bits(cand):
            phi[v] = x
            used |= 1 << x
            if extend(i + 1):
                return True
            used &= ~(1 << x)
        phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def is_isomorphism(g: Graph, h: Graph, phi: list[int]) -> bool:
    """Check that ``phi`` is a bijection preserving adjacency and non-adjacency."""
    if g.n != h.n or len(phi) != g.n or sorted(phi) != list(range(g.n)):
        return False
    return all(
        g.has_edge(u, v) == h.has_edge(phi[u], phi[v]) for u in range(g.n) for v in range(u + 1, g.n)
    )


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
        if not changed:
            return cells


def canonical_labeling(g: Graph, *, cap: int = DEFAULT_CANON_CAP) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(order, rows)``: ``order[i]`` is the vertex placed at position ``i``.

    ``rows`` is the relabelled adjacency; it is identical for isomorphic graphs.
    """
    n = g.n
    if n > cap:
        raise CapabilityError(f"canonical form capped at {cap} vertices (got {n})")
    adj = g.adj
    if n == 0:
        return [], ()
    best_rows: tuple[int, ...] | None = None
    best_order: list[int] = []

    def leaf(order: list[int]) -> None:
        nonlocal best_rows, best_order
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            m = 0
            for u in bits(adj[v]):
                m |= 1 << pos[u]
            rows.append(m)
        rows_t = tuple(rows)
        if best_rows is None or rows_t > best_rows:
            best_rows = rows_t
            best_order = order

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf([c[0] for c in cells])
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        reps: list[int] = []
        for v in target:
            # A twin of an earlier representative gives a mirror-image subtree.
            if any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
                continue
            reps.append(v)
            rest = [u for u in target if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    search([list(range(n))])
    assert best_rows is not None
    return best_order, best_rows


def canonical_form(g: Graph, *, cap: int = DEFAULT_CANON_CAP) -> CanonicalForm:
    """A byte string equal for two graphs exactly when they are isomorphic.

    It is the graph6 encoding of the canonically relabelled graph.
    """
    from .formats import to_graph6

    order, _ = canonical_labeling(g, cap=cap)
    return to_graph6(canonical_graph(g, order)).encode("ascii")


def canonical_graph(g: Graph, order: list[int] | None = None, *, cap: int = DEFAULT_CANON_CAP) -> Graph:
    """Relabel ``g`` into its canonical representative."""
    if order is None:
        order, _ = canonical_labeling(g, cap=cap)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(g, perm)
