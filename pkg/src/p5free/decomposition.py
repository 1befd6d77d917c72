"""Substitution trees for {P5, co-P5, bull}-free graphs.

Every node carries the *original* vertex numbers it spans.  A substitution
node contracts a homogeneous set ``X`` to its smallest member ``vertex``; the
quotient subtree keeps that vertex and the child subtree spans ``X``.
Recomposing a node therefore replaces ``vertex`` in the quotient by the whole
child graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .errors import PreconditionError, TheoremViolation
from .formats import to_graph6
from .graph import Graph, bits, complement, graph_from_edges, induced_by_order
from .iso import are_isomorphic
from .patterns import contains
from .recognizers import find_half_graph_cert, find_homogeneous_set_mask

LEAF_KINDS = ("small", "c5", "halfgraph", "co-halfgraph")


class DecompositionError(ValueError):
    """A tree is malformed or one of its leaves does not re-validate."""


@dataclass(frozen=True)
class Leaf:
    vertices: tuple[int, ...]
    graph: Graph
    kind: str

    def to_dict(self) -> dict:
        v = self.vertices
        return {
            "kind": "leaf",
            "class": self.kind,
            "vertices": [x + 1 for x in v],
            "edges": [[v[a] + 1, v[b] + 1] for a, b in self.graph.edges()],
        }


@dataclass(frozen=True)
class Substitution:
    quotient: Leaf | Substitution
    vertex: int
    child: Leaf | Substitution

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.quotient.vertices) - {self.vertex} | set(self.child.vertices)))

    def to_dict(self) -> dict:
        return {
            "kind": "substitution",
            "vertex": self.vertex + 1,
            "quotient": self.quotient.to_dict(),
            "child": self.child.to_dict(),
        }


Tree = Leaf | Substitution


def tree_from_dict(data: dict) -> Tree:
    try:
        if data["kind"] == "leaf":
            vs = [int(x) - 1 for x in data["vertices"]]
            pos = {v: i for i, v in enumerate(vs)}
            edges = [(pos[int(a) - 1], pos[int(b) - 1]) for a, b in data["edges"]]
            return Leaf(tuple(vs), graph_from_edges(len(vs), edges), data["class"])
        if data["kind"] == "substitution":
            return Substitution(tree_from_dict(data["quotient"]), int(data["vertex"]) - 1, tree_from_dict(data["child"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise DecompositionError(f"malformed tree node: {exc}") from None
    raise DecompositionError(f"unknown node kind {data.get('kind')!r}")


def classify_leaf(g: Graph) -> str | None:
    if g.n <= 2:
        return "small"
    if g.n == 5 and are_isomorphic(g, catalog.C5()) is not None:
        return "c5"
    if find_half_graph_cert(g) is not None:
        return "halfgraph"
    if find_half_graph_cert(complement(g)) is not None:
        return "co-halfgraph"
    return None


def decompose_bullfree(g: Graph, *, check_class: bool = True) -> Tree:
    """Recursively split ``g`` along homogeneous sets until every piece is a leaf.

    Leaves are graphs on at most two vertices, C5, half graphs and their
    complements.  A piece that is none of these and has no homogeneous set
    contradicts the structure theorem and raises ``TheoremViolation``.
    """
    if check_class:
        failed = [f"G contains {name}" for name, pat in (("P5", catalog.P5()), ("P5C", catalog.P5C()), ("BULL", catalog.BULL())) if contains(g, pat)]
        if failed:
            raise PreconditionError(failed)
    return _decompose(g, tuple(range(g.n)))


def _decompose(g: Graph, labels: tuple[int, ...]) -> Tree:
    kind = classify_leaf(g)
    if kind is not None:
        return Leaf(labels, g, kind)
    x = find_homogeneous_set_mask(g)
    if not x:
        raise TheoremViolation(
            "no structure-theorem outcome applies", {"graph6": to_graph6(g), "vertices": [v + 1 for v in labels]}
        )
    inside = list(bits(x))
    rep = inside[0]
    child = _decompose(induced_by_order(g, inside), tuple(labels[i] for i in inside))
    keep = [v for v in range(g.n) if not x >> v & 1 or v == rep]
    quotient = _decompose(induced_by_order(g, keep), tuple(labels[i] for i in keep))
    return Substitution(quotient, labels[rep], child)


def _recompose(node: Tree) -> tuple[list[int], Graph]:
    if isinstance(node, Leaf):
        if len(node.vertices) != node.graph.n or len(set(node.vertices)) != node.graph.n:
            raise DecompositionError("leaf vertex list does not match its graph")
        if node.kind not in LEAF_KINDS:
            raise DecompositionError(f"unknown leaf class {node.kind!r}")
        actual = classify_leaf(node.graph)
        ok = {
            "small": node.graph.n <= 2,
            "c5": node.graph.n == 5 and are_isomorphic(node.graph, catalog.C5()) is not None,
            "halfgraph": find_half_graph_cert(node.graph) is not None,
            "co-halfgraph": find_half_graph_cert(complement(node.graph)) is not None,
        }[node.kind]
        if not ok:
            raise DecompositionError(f"leaf recorded as {node.kind!r} re-checks as {actual!r}")
        return list(node.vertices), node.graph
    q_labels, q = _recompose(node.quotient)
    c_labels, c = _recompose(node.child)
    if len(q_labels) < 2 or len(c_labels) < 2:
        raise DecompositionError("both sides of a substitution need at least two vertices")
    if node.vertex not in q_labels or node.vertex not in c_labels:
        raise DecompositionError(f"substituted vertex {node.vertex + 1} must appear in quotient and child")
    if set(q_labels) & set(c_labels) != {node.vertex}:
        raise DecompositionError("quotient and child overlap beyond the substituted vertex")
    hook = q_labels.index(node.vertex)
    outer = [i for i in range(q.n) if i != hook]
    labels = [q_labels[i] for i in outer] + c_labels
    k = len(outer)
    edges = []
    for a in range(k):
        for b in range(a + 1, k):
            if q.has_edge(outer[a], outer[b]):
                edges.append((a, b))
    for a, b in c.edges():
        edges.append((k + a, k + b))
    for a in range(k):
        if q.has_edge(outer[a], hook):
            edges.extend((a, k + y) for y in range(c.n))
    g = graph_from_edges(len(labels), edges)
    # The child's vertices must form a proper homogeneous set of the recomposed graph.
    inside = ((1 << c.n) - 1) << k
    for w in range(k):
        nb = g.adj[w] & inside
        if nb and nb != inside:
            raise DecompositionError("child vertex set is not homogeneous after substitution")
    return labels, g


def verify_decomposition(tree: Tree) -> Graph:
    """Recompose the tree bottom-up, re-validating every leaf and substitution.

    The result is on vertices ``0..n-1`` numbered by the original labels.
    """
    labels, g = _recompose(tree)
    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise DecompositionError("tree does not cover vertices 1..n exactly once")
    pos = {lab: i for i, lab in enumerate(labels)}
    return induced_by_order(g, [pos[v] for v in range(n)])


def tree_stats(tree: Tree) -> dict:
    leaves: dict[str, int] = {}
    depth = 0

    def walk(node: Tree, d: int) -> None:
        nonlocal depth
        depth = max(depth, d)
        if isinstance(node, Leaf):
            leaves[node.kind] = leaves.get(node.kind, 0) + 1
        else:
            walk(node.quotient, d + 1)
            walk(node.child, d + 1)

    walk(tree, 0)
    return {"leaves": leaves, "depth": depth}
