"""Named graphs used throughout the package, with their conventional labels."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, complement, graph_from_edges


@dataclass(frozen=True)
class NamedGraph:
    id: str
    graph: Graph
    labels: tuple[str, ...]
    vertex_labels: dict[str, int] = field(compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self.vertex_labels:
            object.__setattr__(self, "vertex_labels", {lab: i for i, lab in enumerate(self.labels)})

    def label(self, v: int) -> str:
        return self.labels[v]

    def index(self, label: str | int) -> int:
        return self.vertex_labels[str(label)]

    def indices(self, labels) -> list[int]:
        return [self.index(x) for x in labels]


def _from_labelled(id_: str, labels: list[str], pairs: list[tuple]) -> NamedGraph:
    pos = {lab: i for i, lab in enumerate(labels)}
    g = graph_from_edges(len(labels), [(pos[str(a)], pos[str(b)]) for a, b in pairs])
    return NamedGraph(id_, g, tuple(labels))


def path(n: int) -> NamedGraph:
    labels = [f"p{i}" for i in range(n)]
    return _from_labelled(f"P{n}", labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def cycle(n: int) -> NamedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    labels = [f"c{i}" for i in range(1, n + 1)]
    return _from_labelled(f"C{n}", labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def complete(n: int) -> NamedGraph:
    labels = [str(i) for i in range(1, n + 1)]
    return _from_labelled(
        f"K{n}", labels, [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    )


def half_graph(k: int) -> NamedGraph:
    """O_k: a_i ~ b_j iff i + j >= k + 1 (1-based)."""
    if k < 1:
        raise ValueError("half graph order must be at least 1")
    labels = [f"a{i}" for i in range(1, k + 1)] + [f"b{j}" for j in range(1, k + 1)]
    pairs = [(f"a{i}", f"b{j}") for i in range(1, k + 1) for j in range(1, k + 1) if i + j >= k + 1]
    return _from_labelled(f"O_{k}", labels, pairs)


def _complement_of(ng: NamedGraph, id_: str) -> NamedGraph:
    return NamedGraph(id_, complement(ng.graph), ng.labels)


H6_EDGES = [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v2", "v5"), ("v3", "v6"), ("v5", "v6")]
BULL_EDGES = [("x1", "x2"), ("x2", "x3"), ("x1", "x3"), ("x1", "y"), ("x2", "z")]

# Figure 2, read off the drawing's edge chains, plus {2,3} complete to {9,10,11,12}.
FIG2_EDGES = [
    (1, 2), (2, 3), (3, 4),
    (8, 7), (7, 6), (6, 5),
    (12, 11), (11, 10), (10, 9),
    (12, 8), (8, 11), (11, 6), (6, 9), (9, 5), (5, 10), (10, 7), (7, 12),
    (1, 7), (7, 3), (3, 5),
    (8, 2), (2, 6), (6, 4),
    (2, 7),
    (3, 6),
] + [(a, b) for a in (2, 3) for b in (9, 10, 11, 12)]  # fmt: skip

# Isomorphism from the Figure 2 graph onto its complement.
FIG2_PHI = {1: 3, 2: 1, 3: 4, 4: 2, 5: 7, 6: 5, 7: 8, 8: 6, 9: 11, 10: 9, 11: 12, 12: 10}

# Figure 3, in the label order of the drawing's edge chains.
FIG3_EDGES = [
    (1, 5), (5, 2), (2, 4), (4, 6), (6, 3), (3, 1),
    (3, 5), (5, 6), (6, 2),
    (8, 6), (6, 5), (5, 7),
    (1, 9), (9, 7),
    (5, 9), (9, 6),
    (4, 10), (10, 8),
    (5, 10), (10, 6),
]  # fmt: skip


@lru_cache(maxsize=None)
def _fixed(key: str) -> NamedGraph:
    if key == "P4":
        return path(4)
    if key == "P5":
        return path(5)
    if key == "P5C":
        return _complement_of(path(5), "P5C")
    if key == "C4":
        return cycle(4)
    if key == "2K2":
        return _from_labelled("2K2", ["1", "2", "3", "4"], [("1", "2"), ("3", "4")])
    if key == "C5":
        return cycle(5)
    if key == "BULL":
        return _from_labelled("BULL", ["x1", "x2", "x3", "y", "z"], BULL_EDGES)
    if key == "H6":
        return _from_labelled("H6", [f"v{i}" for i in range(1, 7)], H6_EDGES)
    if key == "H6C":
        return _complement_of(_fixed("H6"), "H6C")
    if key == "FIG2":
        return _from_labelled("FIG2", [str(i) for i in range(1, 13)], FIG2_EDGES)
    if key == "FIG3":
        return _from_labelled("FIG3", [str(i) for i in range(1, 11)], FIG3_EDGES)
    raise KeyError(key)


FIXED_IDS = ("P4", "P5", "P5C", "C4", "2K2", "C5", "BULL", "H6", "H6C", "FIG2", "FIG3")
_ALIASES = {"COP5": "P5C", "P5BAR": "P5C", "HOUSE": "P5C", "C4C": "2K2", "COC4": "2K2", "COH6": "H6C"}
_FAMILY = re.compile(r"^(O|P|C|K)[:_]?(\d+)$")


def get(name: str) -> NamedGraph:
    """Look up a catalog graph by id: ``fig2``, ``h6``, ``p5c``, ``o:4``, ``c:6``, ..."""
    key = name.strip().upper().replace("-", "")
    key = _ALIASES.get(key, key)
    if key in FIXED_IDS:
        return _fixed(key)
    m = _FAMILY.match(key)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "O":
            return half_graph(k)
        if kind == "P":
            return path(k)
        if kind == "C":
            return cycle(k)
        return complete(k)
    raise KeyError(f"unknown catalog graph {name!r}")


def P4() -> Graph:
    return _fixed("P4").graph


def P5() -> Graph:
    return _fixed("P5").graph


def P5C() -> Graph:
    return _fixed("P5C").graph


def C4() -> Graph:
    return _fixed("C4").graph


def TWO_K2() -> Graph:
    return _fixed("2K2").graph


def C5() -> Graph:
    return _fixed("C5").graph


def BULL() -> Graph:
    return _fixed("BULL").graph


def H6() -> Graph:
    return _fixed("H6").graph


def FIG2() -> NamedGraph:
    return _fixed("FIG2")


def FIG3() -> NamedGraph:
    return _fixed("FIG3")
