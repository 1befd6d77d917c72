"""Graph sources and lemma sweeps.

Small graphs are enumerated one per isomorphism class by vertex extension: every
class on ``n`` vertices arises from some class on ``n - 1`` vertices plus a new
vertex, so extending each parent by every neighbourhood and keeping one graph
per canonical form is complete.  Up to ``n = 9`` the canonical forms of a whole
level are held in memory; ``n = 10`` uses canonical deletion so only one
parent's children are kept at a time.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from . import catalog
from .errors import CapabilityError
from .formats import FormatError, from_edge_list, from_graph6, iter_graph6, looks_like_edge_list, to_graph6
from .graph import Graph, empty_graph, induced_by_order
from .iso import canonical_form, canonical_labeling
from .patterns import contains
from .theorems import (
    CONJECTURES,
    FAILS,
    HOLDS,
    LEMMAS,
    PRECONDITION_NOT_MET,
    Facts,
    HarnessConfig,
    check_lemma,
)

log = logging.getLogger(__name__)

ENUM_CAP = 9
STATUSES = (HOLDS, FAILS, PRECONDITION_NOT_MET)

# Published conjecture refutations; anything else is a new finding.
EXPECTED_REFUTATIONS: dict[str, tuple[str, ...]] = {"H6_CONJ": ("FIG2",), "CONJ_1_6": ("FIG3",)}


# -- enumeration -------------------------------------------------------------------


def _children(parent: Graph) -> Iterator[Graph]:
    n = parent.n + 1
    top = 1 << (n - 1)
    for s in range(top):
        adj = [a | (top if s >> v & 1 else 0) for v, a in enumerate(parent.adj)]
        adj.append(s)
        yield Graph(n, adj, validate=False)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (empty_graph(1),)
    seen: dict[tuple[int, ...], Graph] = {}
    for parent in _level(n - 1):
        for child in _children(parent):
            _, rows = canonical_labeling(child, cap=n)
            if rows not in seen:
                seen[rows] = Graph(n, rows, validate=False)
    return tuple(seen.values())


def _augment(parents: Iterable[Graph]) -> Iterator[Graph]:
    """Canonical-deletion extension: accept a child only when deleting its
    canonically last vertex gives back the parent's class."""
    for parent in parents:
        n = parent.n + 1
        _, prow = canonical_labeling(parent, cap=n)
        local: set[tuple[int, ...]] = set()
        for child in _children(parent):
            order, rows = canonical_labeling(child, cap=n)
            if rows in local:
                continue
            last = order[-1]
            if last != n - 1:
                rest = [v for v in range(n) if v != last]
                _, drow = canonical_labeling(induced_by_order(child, rest), cap=n)
                if drow != prow:
                    continue
            local.add(rows)
            yield Graph(n, rows, validate=False)


def enumerate_graphs(n: int, *, allow_10: bool = False, method: str | None = None) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, in a fixed order.

    ``method`` is ``"dedup"`` (whole level in memory) or ``"augment"``
    (canonical deletion); by default ``augment`` is used only for ``n = 10``.
    """
    if n < 1:
        raise CapabilityError("enumeration needs n >= 1")
    if n > 10 or (n == 10 and not allow_10):
        raise CapabilityError(f"enumeration is capped at n = {ENUM_CAP} (n = 10 needs allow_10=True)")
    method = method or ("augment" if n == 10 else "dedup")
    if n == 1:
        yield from _level(1)
        return
    if method == "dedup":
        yield from _level(n)
    elif method == "augment":
        if n == 10:
            log.warning("enumerating n = 10 (about 12 million classes); this takes many hours in Python")
            # parents are streamed too, so no level beyond n = 8 is ever held in memory
            yield from _augment(_augment(_level(8)))
        else:
            yield from _augment(_level(n - 1))
    else:
        raise ValueError(f"unknown enumeration method {method!r}")


def filter_free(stream: Iterable[Graph], patterns: Sequence[Graph]) -> Iterator[Graph]:
    """Pass through the graphs containing none of ``patterns``, preserving order."""
    for g in stream:
        if not any(contains(g, p) for p in patterns):
            yield g


def random_graph(n: int, p: float, seed: int | str) -> Graph:
    """G(n, p): pairs ``(i, j)``, ``i < j``, visited in lexicographic order; each is
    an edge when ``random.Random(seed).random() < p``.  Reproducible across platforms."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj, validate=False)


PATTERN_NAMES = {"p4": "P4", "p5": "P5", "p5c": "P5C", "cop5": "P5C", "c4": "C4", "2k2": "2K2", "c5": "C5", "bull": "BULL", "h6": "H6", "h6c": "H6C"}


def parse_patterns(spec: str | Iterable[str]) -> list[tuple[str, Graph]]:
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    out = []
    for item in items:
        item = item.strip()
        if item:
            ng = catalog.get(PATTERN_NAMES.get(item.lower(), item))
            out.append((ng.id, ng.graph))
    return out


# -- sources --------------------------------------------------------------------------


@dataclass(frozen=True)
class SourceItem:
    index: int
    graph: Graph
    name: str | None = None
    line: int | None = None


@dataclass
class Source:
    """Where a sweep takes its graphs from.

    ``kind`` is ``"enumerate"`` (all classes with ``n_min <= n <= n_max``),
    ``"file"`` (graph6 or edge list), ``"named"`` (catalog ids) or ``"graphs"``.
    """

    kind: str
    n_min: int = 1
    n_max: int = 0
    path: str | None = None
    names: tuple[str, ...] = ()
    graphs: tuple[Graph, ...] = ()
    free: tuple[str, ...] = ()
    strict: bool = False
    parse_errors: list[FormatError] = field(default_factory=list)

    def describe(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.kind == "enumerate":
            d.update(n_min=self.n_min, n_max=self.n_max)
        elif self.kind == "file":
            d["path"] = str(self.path)
        elif self.kind == "named":
            d["names"] = list(self.names)
        else:
            d["count"] = len(self.graphs)
        if self.free:
            d["free"] = list(self.free)
        return d

    def items(self) -> Iterator[SourceItem]:
        pats = [g for _, g in parse_patterns(self.free)] if self.free else []

        def keep(g: Graph) -> bool:
            return not pats or not any(contains(g, p) for p in pats)

        idx = 0
        if self.kind == "enumerate":
            for n in range(max(1, self.n_min), self.n_max + 1):
                for g in enumerate_graphs(n):
                    if keep(g):
                        yield SourceItem(idx, g)
                        idx += 1
        elif self.kind == "file":
            for item in read_graph_file(self.path, strict=self.strict, errors=self.parse_errors):
                if keep(item.graph):
                    yield SourceItem(idx, item.graph, line=item.line)
                    idx += 1
        elif self.kind == "named":
            for name in self.names:
                ng = catalog.get(name)
                if keep(ng.graph):
                    yield SourceItem(idx, ng.graph, name=ng.id)
                    idx += 1
        elif self.kind == "graphs":
            for g in self.graphs:
                if keep(g):
                    yield SourceItem(idx, g)
                    idx += 1
        else:
            raise ValueError(f"unknown source kind {self.kind!r}")


def read_graph_file(path: str | Path, *, strict: bool = False, errors: list | None = None) -> Iterator[SourceItem]:
    """Graphs from a graph6 file (one per line) or a single edge-list file."""
    p = Path(path)
    if looks_like_edge_list(p):
        yield SourceItem(0, from_edge_list(p.read_text(encoding="ascii")), line=1)
        return
    with open(p, encoding="ascii", errors="replace") as fh:
        for i, (line, g) in enumerate(iter_graph6(fh, strict=strict, errors=errors)):
            yield SourceItem(i, g, line=line)


# -- sweeps ------------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    jobs: int = 1
    chunk_size: int = 256
    exemplars: int = 3
    harness: HarnessConfig = field(default_factory=HarnessConfig)

    def to_dict(self) -> dict:
        return {
            "jobs": self.jobs,
            "chunk_size": self.chunk_size,
            "exemplars": self.exemplars,
            **self.harness.to_dict(),
        }


def _check_chunk(args: tuple[list[tuple[int, str]], tuple[str, ...], HarnessConfig]) -> list[tuple[int, int, list[str], dict]]:
    chunk, lemma_ids, cfg = args
    out = []
    for idx, g6 in chunk:
        g = from_graph6(g6)
        f = Facts(g)
        statuses = []
        failures = {}
        for lid in lemma_ids:
            v = check_lemma(lid, g, cfg, f)
            statuses.append(v.status)
            if v.status == FAILS:
                failures[lid] = v.to_dict()
        out.append((idx, g.n, statuses, failures))
    return out


@lru_cache(maxsize=None)
def _manifest_forms() -> dict[bytes, str]:
    names = {name for names in EXPECTED_REFUTATIONS.values() for name in names}
    return {canonical_form(catalog.get(name).graph, cap=16): name for name in names}


def _identify(g: Graph) -> str | None:
    if g.n > 16:
        return None
    return _manifest_forms().get(canonical_form(g, cap=16))


def run_suite(source: Source, lemma_ids: Sequence[str], config: SweepConfig | None = None) -> dict:
    """Apply each lemma to every source graph and aggregate a sweep report.

    Results are merged in source order, so the report does not depend on
    ``config.jobs``.
    """
    cfg = config or SweepConfig()
    lemma_ids = tuple(lemma_ids)
    for lid in lemma_ids:
        if lid not in LEMMAS:
            raise KeyError(f"unknown lemma {lid!r}")
    t0 = time.perf_counter()
    items = list(source.items())
    names = {it.index: it.name for it in items}
    lines = {it.index: it.line for it in items}
    payload = [(it.index, to_graph6(it.graph)) for it in items]
    chunks = [payload[i : i + cfg.chunk_size] for i in range(0, len(payload), cfg.chunk_size)]
    jobs = [(c, lemma_ids, cfg.harness) for c in chunks]
    if cfg.jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = [r for part in pool.map(_check_chunk, jobs) for r in part]
    else:
        results = [r for job in jobs for r in _check_chunk(job)]
    results.sort(key=lambda r: r[0])
    g6_of = dict(payload)

    counts: dict[str, dict[str, dict[str, int]]] = {lid: {} for lid in lemma_ids}
    per_n: dict[str, int] = {}
    findings: list[dict] = []
    refutations: list[dict] = []
    first_holds: dict[str, list[int]] = {lid: [] for lid in lemma_ids}
    expected_seen: dict[str, set[str]] = {lid: set() for lid in lemma_ids}
    findings_total = 0
    for idx, n, statuses, failures in results:
        key = str(n)
        per_n[key] = per_n.get(key, 0) + 1
        for lid, status in zip(lemma_ids, statuses):
            bucket = counts[lid].setdefault(key, {s: 0 for s in STATUSES})
            bucket[status] += 1
            if status == HOLDS and len(first_holds[lid]) < cfg.exemplars:
                first_holds[lid].append(idx)
        for lid, verdict in failures.items():
            entry = {
                "lemma": lid,
                "source_index": idx,
                "n": n,
                "graph6": g6_of[idx],
                "name": names.get(idx),
                "line": lines.get(idx),
                "verdict": verdict,
            }
            if lid in CONJECTURES:
                ident = names.get(idx) or _identify(from_graph6(g6_of[idx]))
                expected = ident in EXPECTED_REFUTATIONS.get(lid, ())
                if expected:
                    expected_seen[lid].add(ident)
                entry["identified_as"] = ident
                entry["expected"] = expected
                refutations.append(entry)
            else:
                findings_total += 1
                if sum(1 for f in findings if f["lemma"] == lid) < max(cfg.exemplars, 1) * 10:
                    findings.append(entry)

    # Manifest graphs present in the source whose conjecture did not fail.
    missing = []
    for idx, n, statuses, failures in results:
        ident = names.get(idx) or (_identify(from_graph6(g6_of[idx])) if n in (10, 12) else None)
        if ident is None:
            continue
        for lid, status in zip(lemma_ids, statuses):
            if ident in EXPECTED_REFUTATIONS.get(lid, ()) and status != FAILS:
                missing.append({"lemma": lid, "name": ident, "status": status, "source_index": idx})

    exemplars = {}
    for lid, idxs in first_holds.items():
        rows = []
        for idx in idxs:
            g = from_graph6(g6_of[idx])
            rows.append({"source_index": idx, "graph6": g6_of[idx], "verdict": check_lemma(lid, g, cfg.harness).to_dict()})
        exemplars[lid] = rows

    totals = {lid: {s: sum(b[s] for b in counts[lid].values()) for s in STATUSES} for lid in lemma_ids}
    new_refutations = [r for r in refutations if not r["expected"]]
    return {
        "schema": "p5free.sweep_report/1",
        "source": source.describe(),
        "lemmas": list(lemma_ids),
        "config": cfg.to_dict(),
        "graphs": len(items),
        "graphs_per_n": per_n,
        "counts": counts,
        "totals": totals,
        "violations": findings_total,
        "findings": findings,
        "refutations": {
            "expected_confirmed": sorted(f"{lid}:{name}" for lid, s in expected_seen.items() for name in s),
            "expected_missing": missing,
            "new": len(new_refutations),
            "entries": refutations[: max(cfg.exemplars, 1) * 10],
        },
        "exemplars": exemplars,
        "parse_errors": [{"line": e.line, "message": str(e)} for e in source.parse_errors],
        "wall_time_s": round(time.perf_counter() - t0, 3),
    }


def report_ok(report: dict) -> bool:
    """No theorem violations and every expected refutation that was in scope occurred."""
    return report["violations"] == 0 and not report["refutations"]["expected_missing"]
