"""graph6 and plain edge-list readers/writers."""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from pathlib import Path

from .graph import Graph, GraphError, graph_from_edges

HEADER = ">>graph6<<"


class FormatError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes, line: int | None = None) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is skipped."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise FormatError("empty graph6 string", line)
    if s[0] == ":" or s[0] == "&":
        raise FormatError("sparse6/digraph6 input is not supported", line)
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise FormatError(f"invalid graph6 character {ch!r}", line)
        vals.append(o - 63)
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise FormatError("truncated graph6 size field", line)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise FormatError(f"expected {need} data bytes for n={n}, found {len(body)}", line)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("non-zero padding bits", line)
    return Graph(n, adj, validate=False)


def iter_graph6(
    lines: Iterable[str | bytes], *, strict: bool = False, errors: list[FormatError] | None = None
) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line.

    In lenient mode malformed lines are skipped and appended to ``errors``;
    in strict mode the first one raises.
    """
    for no, raw in enumerate(lines, start=1):
        s = raw.decode("ascii", errors="replace") if isinstance(raw, bytes) else raw
        s = s.strip()
        if not s or (s == HEADER):
            continue
        try:
            yield no, from_graph6(s, line=no)
        except FormatError as exc:
            if strict:
                raise
            if errors is not None:
                errors.append(exc)


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count


def to_edge_list(g: Graph) -> str:
    """``n m`` header then one ``u v`` line per edge, 1-based."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [(no, r) for no, r in enumerate(rows, start=1) if r]
    if not rows:
        raise FormatError("empty edge list")
    no, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise FormatError("header must be 'n m'", no) from None
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}", no)
    edges = []
    for no, r in body:
        if len(r) != 2:
            raise FormatError("edge line must be 'u v'", no)
        try:
            u, v = int(r[0]) - 1, int(r[1]) - 1
        except ValueError:
            raise FormatError("edge endpoints must be integers", no) from None
        edges.append((u, v))
    try:
        return graph_from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


_EDGE_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


def looks_like_edge_list(path: str | Path) -> bool:
    p = Path(path)
    if p.suffix in {".el", ".edges", ".edgelist"}:
        return True
    if p.suffix in {".g6", ".graph6"}:
        return False
    with open(p, encoding="ascii", errors="replace") as fh:
        for ln in fh:
            if ln.strip() and not ln.lstrip().startswith("#"):
                return bool(_EDGE_HEADER.match(ln))
    return False
