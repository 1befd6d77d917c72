"""Immutable simple graphs backed by neighbourhood bitmasks.

Vertices are ``0..n-1``.  ``adj[v]`` is an ``int`` whose bit ``u`` is set
when ``u`` and ``v`` are adjacent, so neighbourhood algebra is plain integer
arithmetic (``&``, ``|``, ``& ~``, ``bit_count``).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, self-loops, ...)."""


class CapabilityError(RuntimeError):
    """Raised when an input exceeds a configured size cap."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A finite simple undirected graph.

    Instances are immutable and hashable; two graphs compare equal when they
    have the same vertex count and identical labelled edge sets.
    """

    __slots__ = ("n", "adj", "_full", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, validate: bool = True) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} neighbour sets, got {len(adj)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_full", (1 << n) - 1)
        object.__setattr__(self, "_hash", None)
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))

    def validate(self) -> None:
        """Check symmetry, irreflexivity and range of every neighbour set."""
        full = self._full
        for v, nb in enumerate(self.adj):
            if nb < 0 or nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # -- basic queries -------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return self._full

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def non_neighbors_mask(self, v: int) -> int:
        """Vertices other than ``v`` that are not adjacent to ``v``."""
        return self._full & ~self.adj[v] & ~(1 << v)

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & self.adj[v]:
                return False
        return True

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _rebuild(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph(n, adj, validate=False)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``0..n-1``; repeated pairs collapse to one edge."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {pair!r} is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, validate=False)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, validate=False)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)], validate=False)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[S]`` together with the list mapping new index -> old vertex.

    New indices follow the increasing order of the original vertices.
    """
    order = sorted(set(vertices))
    for v in order:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} is not in the graph (n={g.n})")
    return induced_by_order(g, order), order


def induced_by_order(g: Graph, order: Sequence[int]) -> Graph:
    """``G[S]`` with new vertex ``i`` being ``order[i]`` (no validation)."""
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        m = 0
        for u in bits(g.adj[v]):
            i = pos.get(u)
            if i is not None:
                m |= 1 << i
        adj.append(m)
    return Graph(len(order), adj, validate=False)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    adj = [0] * g.n
    for v, nb in enumerate(g.adj):
        m = 0
        for u in bits(nb):
            m |= 1 << perm[u]
        adj[perm[v]] = m
    return Graph(g.n, adj, validate=False)


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by lowest vertex."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def anticomponent_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of the complement restricted to ``within``."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= remaining & ~g.adj[v]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected_mask(g: Graph, mask: int) -> bool:
    return mask == 0 or len(component_masks(g, mask)) == 1


def is_anticonnected_mask(g: Graph, mask: int) -> bool:
    return mask == 0 or len(anticomponent_masks(g, mask)) == 1


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return len(component_masks(g)) == 1


def is_anticonnected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("anticonnectivity is undefined for the empty graph")
    return len(anticomponent_masks(g)) == 1


def spanning_tree(g: Graph, *, anti: bool = False) -> list[tuple[int, int]] | None:
    """BFS spanning tree of G (or of its complement); ``None`` if disconnected."""
    if g.n == 0:
        return None
    full = g.full_mask
    seen = 1
    tree = []
    queue = [0]
    for v in queue:
        nb = (full & ~g.adj[v] & ~(1 << v)) if anti else g.adj[v]
        for u in bits(nb & ~seen):
            seen |= 1 << u
            tree.append((v, u))
            queue.append(u)
    return tree if seen == full else None


def substitute(h1: Graph, v: int, h2: Graph) -> tuple[Graph, list[int], list[int]]:
    """Substitute ``h2`` for vertex ``v`` of ``h1``.

    Returns ``(H, map1, map2)`` where ``map1[x]`` is the new index of vertex
    ``x`` of ``h1`` (``-1`` for ``v``) and ``map2[y]`` that of vertex ``y`` of
    ``h2``.  Vertices of ``h1`` keep their relative order and come first.
    """
    map1 = []
    k = 0
    for x in range(h1.n):
        if x == v:
            map1.append(-1)
        else:
            map1.append(k)
            k += 1
    map2 = list(range(k, k + h2.n))
    edges = []
    for a, b in h1.edges():
        if v not in (a, b):
            edges.append((map1[a], map1[b]))
    for a, b in h2.edges():
        edges.append((map2[a], map2[b]))
    for x in bits(h1.adj[v]):
        for y in range(h2.n):
            edges.append((map1[x], map2[y]))
    return graph_from_edges(k + h2.n, edges), map1, map2
