"""Command-line entry point.

Exit codes: 0 completed with no theorem violation (expected conjecture
refutations do not count), 2 violations or unconfirmed claims were found and
reported, 1 usage or I/O error.  Every option that takes a value can also be set
through an environment variable ``P5FREE_<OPTION>``, e.g. ``P5FREE_JOBS=8``.
"""

from __future__ import annotations

import json
import logging
import sys
from collections.abc import Iterator
from dataclasses import dataclass

import click

from . import catalog
from .battery import run_batteries
from .corpus import ENUM_CAP, Source, SweepConfig, enumerate_graphs, filter_free, parse_patterns, read_graph_file, report_ok, run_suite
from .decomposition import decompose_bullfree, tree_stats, verify_decomposition
from .errors import CapabilityError, PreconditionError, TheoremViolation
from .formats import FormatError, to_graph6
from .graph import Graph, GraphError, complement
from .iso import DEFAULT_ISO_CAP
from .patterns import enumerate_induced, find_induced
from .recognizers import (
    ONEJOIN_CAP,
    antisimplicial_vertices,
    find_homogeneous_set,
    find_one_join,
    find_split_partition,
    half_graph_side,
    simplicial_vertices,
)
from .theorems import CONJECTURES, FAILS, LEMMAS, HarnessConfig, check_lemma, resolve_lemmas

EXIT_OK, EXIT_USAGE, EXIT_FOUND = 0, 1, 2
ENV = "P5FREE_"


@dataclass(frozen=True)
class Item:
    index: int
    graph: Graph
    name: str | None = None
    labels: tuple[str, ...] | None = None
    line: int | None = None

    def header(self) -> dict:
        d: dict = {"graph_index": self.index}
        if self.name:
            d["graph"] = self.name
        if self.line is not None:
            d["line"] = self.line
        return d


class Found(Exception):
    """Raised by a subcommand to finish with exit code 2."""


def _emit(out: str | None, records, *, lines: bool) -> None:
    fh = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        if lines:
            for r in records:
                fh.write(json.dumps(r, sort_keys=False) + "\n")
        else:
            json.dump(records, fh, indent=2)
            fh.write("\n")
    finally:
        if out:
            fh.close()


def _split_ids(values: tuple[str, ...]) -> list[str]:
    return [x.strip() for v in values for x in v.split(",") if x.strip()]


def _inputs(in_path: str | None, graphs: tuple[str, ...], strict: bool, errors: list) -> Iterator[Item]:
    if not in_path and not graphs:
        raise click.UsageError("give an input with --in FILE or --graph ID")
    idx = 0
    for gid in _split_ids(graphs):
        try:
            ng = catalog.get(gid)
        except KeyError as exc:
            raise click.UsageError(str(exc.args[0])) from None
        yield Item(idx, ng.graph, ng.id, ng.labels)
        idx += 1
    if in_path:
        for it in read_graph_file(in_path, strict=strict, errors=errors):
            yield Item(idx, it.graph, line=it.line)
            idx += 1


def _harness(ctx_obj: dict) -> HarnessConfig:
    return HarnessConfig(iso_cap=ctx_obj["iso_cap"], onejoin_cap=ctx_obj["onejoin_cap"], seed=ctx_obj["seed"])


def _positive(ctx, param, value):
    if value is not None and value < 1:
        raise click.BadParameter("must be positive")
    return value


# -- options shared by several commands -------------------------------------------------

in_opt = click.option("--in", "in_path", type=click.Path(dir_okay=False), envvar=ENV + "IN", help="graph6 or edge-list file.")
out_opt = click.option("--out", type=click.Path(dir_okay=False), envvar=ENV + "OUT", help="Write output here instead of stdout.")
graph_opt = click.option("--graph", "graphs", multiple=True, help="Catalog id(s), e.g. fig2, h6, o:4; comma separated or repeated.")
strict_opt = click.option("--strict", is_flag=True, envvar=ENV + "STRICT", help="Abort on the first malformed graph6 line.")
jobs_opt = click.option("--jobs", type=int, default=1, show_default=True, envvar=ENV + "JOBS", callback=_positive)
exemplars_opt = click.option("--exemplars", type=int, default=3, show_default=True, envvar=ENV + "EXEMPLARS")
nmax_opt = click.option("--n-max", "--max-n", "n_max", type=int, envvar=ENV + "N_MAX", help=f"Enumerate all classes up to this order (<= {ENUM_CAP}).")
free_opt = click.option("--free", envvar=ENV + "FREE", help="Keep only graphs free of these patterns, e.g. p5,p5c,c5.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--iso-cap", type=int, default=DEFAULT_ISO_CAP, show_default=True, envvar=ENV + "ISO_CAP", callback=_positive)
@click.option("--onejoin-cap", type=int, default=ONEJOIN_CAP, show_default=True, envvar=ENV + "ONEJOIN_CAP", callback=_positive)
@click.option("--seed", type=int, default=0, show_default=True, envvar=ENV + "SEED")
@click.option("-v", "--verbose", is_flag=True)
@click.pass_context
def cli(ctx, iso_cap, onejoin_cap, seed, verbose):
    """Certificates and lemma checks for {P5, co-P5}-free graphs."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(levelname)s %(message)s")
    ctx.obj = {"iso_cap": iso_cap, "onejoin_cap": onejoin_cap, "seed": seed}


# -- catalog ----------------------------------------------------------------------------


def catalog_entry(ng: catalog.NamedGraph) -> dict:
    g = ng.graph
    degrees: dict[str, list[str]] = {}
    for v in range(g.n):
        degrees.setdefault(str(g.degree(v)), []).append(ng.label(v))
    return {
        "id": ng.id,
        "n": g.n,
        "m": g.num_edges(),
        "labels": list(ng.labels),
        "edges": [[ng.label(a), ng.label(b)] for a, b in g.edges()],
        "degree_classes": dict(sorted(degrees.items(), key=lambda kv: int(kv[0]))),
        "graph6": to_graph6(g),
    }


@cli.group("catalog")
def catalog_cmd():
    """Named graphs."""


@catalog_cmd.command("list")
def catalog_list():
    for gid in catalog.FIXED_IDS:
        ng = catalog.get(gid)
        click.echo(f"{gid:6} n={ng.graph.n:<3} m={ng.graph.num_edges()}")
    click.echo("families: o:k (half graph), p:n (path), c:n (cycle), k:n (complete)")


@catalog_cmd.command("show")
@click.argument("name")
@click.option("--json", "as_json", is_flag=True, help="Print the entry as JSON.")
def catalog_show(name, as_json):
    try:
        ng = catalog.get(name)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0])) from None
    e = catalog_entry(ng)
    if as_json:
        click.echo(json.dumps(e, indent=2))
        return
    click.echo(f"{e['id']}: {e['n']} vertices, {e['m']} edges")
    click.echo("vertices: " + ", ".join(e["labels"]))
    click.echo("edges: " + ", ".join(f"{a}-{b}" for a, b in e["edges"]))
    for d, vs in e["degree_classes"].items():
        click.echo(f"degree {d}: {{{', '.join(vs)}}}")
    click.echo(f"graph6: {e['graph6']}")


# -- recognize / find --------------------------------------------------------------------

CLASSES = ("prime", "split", "halfgraph", "onejoin", "simplicial", "antisimplicial")


def recognize_graph(g: Graph, classes, labels, cfg: HarnessConfig) -> dict:
    out: dict = {}

    def name(v):
        return labels[v] if labels else v + 1

    for c in classes:
        if c == "prime":
            h = find_homogeneous_set(g)
            out[c] = {"value": g.n >= 4 and h is None, "certificate": h.to_dict(labels) if h else None}
        elif c == "split":
            s = find_split_partition(g)
            out[c] = {"value": s is not None, "certificate": s.to_dict(labels) if s else None}
        elif c == "halfgraph":
            hs = half_graph_side(g)
            out[c] = {"value": hs is not None, "side": hs[0] if hs else None, "certificate": hs[1].to_dict(labels) if hs else None}
        elif c == "onejoin":
            row = {}
            for side, h in (("G", g), ("complement", complement(g))):
                oj = find_one_join(h, cfg.onejoin_cap)
                row[side] = oj.to_dict(labels) if oj else None
            out[c] = {"value": any(row.values()), "certificate": row}
        elif c == "simplicial":
            out[c] = {"value": [name(v) for v in sorted(simplicial_vertices(g))]}
        elif c == "antisimplicial":
            out[c] = {"value": [name(v) for v in sorted(antisimplicial_vertices(g))]}
    return out


@cli.command()
@in_opt
@graph_opt
@out_opt
@strict_opt
@click.option("--classes", default="prime,split,halfgraph,onejoin", show_default=True, help=f"Any of {','.join(CLASSES)}.")
@click.pass_obj
def recognize(obj, in_path, graphs, out, strict, classes):
    """Recognize graph classes, with certificates (JSON lines)."""
    wanted = [c.strip().lower() for c in classes.split(",") if c.strip()]
    bad = [c for c in wanted if c not in CLASSES]
    if bad:
        raise click.UsageError(f"unknown class(es) {', '.join(bad)}; choose from {', '.join(CLASSES)}")
    cfg = _harness(obj)
    errors: list = []
    recs = (
        {**it.header(), "classes": recognize_graph(it.graph, wanted, it.labels, cfg)}
        for it in _inputs(in_path, graphs, strict, errors)
    )
    _emit(out, recs, lines=True)
    _warn_parse(errors)


@cli.command()
@in_opt
@graph_opt
@out_opt
@strict_opt
@click.option("--pattern", required=True, help="Catalog pattern: p4, p5, p5c, c4, 2k2, c5, bull, h6, ...")
@click.option("--all", "all_copies", is_flag=True, help="Emit every induced copy, not just the first.")
def find(in_path, graphs, out, strict, pattern, all_copies):
    """Find induced copies of a pattern (JSON lines {graph_index, pattern, image})."""
    try:
        [(pid, pg)] = parse_patterns(pattern)
    except (KeyError, ValueError):
        raise click.UsageError(f"--pattern takes one catalog pattern, got {pattern!r}") from None
    errors: list = []

    def recs():
        for it in _inputs(in_path, graphs, strict, errors):
            embs = enumerate_induced(it.graph, pg, pid) if all_copies else [e for e in [find_induced(it.graph, pg, pid)] if e]
            for e in embs:
                yield {**it.header(), **e.to_dict(it.labels)}

    _emit(out, recs(), lines=True)
    _warn_parse(errors)


def _warn_parse(errors: list[FormatError]) -> None:
    for e in errors:
        click.echo(f"warning: skipped line {e.line}: {e}", err=True)


# -- check / sweep -------------------------------------------------------------------------


def _sweep_summary(report: dict) -> str:
    rows = [f"{'lemma':16}{'holds':>9}{'fails':>9}{'precond':>10}"]
    for lid in report["lemmas"]:
        t = report["totals"][lid]
        tag = " (conjecture)" if lid in CONJECTURES else ""
        rows.append(f"{lid:16}{t['holds']:>9}{t['fails']:>9}{t['precondition_not_met']:>10}{tag}")
    ref = report["refutations"]
    rows.append(f"graphs: {report['graphs']}  theorem violations: {report['violations']}  wall time: {report['wall_time_s']} s")
    if ref["expected_confirmed"]:
        rows.append("expected refutations confirmed: " + ", ".join(ref["expected_confirmed"]))
    for m in ref["expected_missing"]:
        rows.append(f"expected refutation NOT confirmed: {m['lemma']} on {m['name']} ({m['status']})")
    if ref["new"]:
        rows.append(f"new conjecture refutations: {ref['new']}")
    return "\n".join(rows)


def _do_sweep(obj, source: Source, lemmas: list[str], jobs: int, exemplars: int, out: str | None) -> None:
    cfg = SweepConfig(jobs=jobs, exemplars=exemplars, harness=_harness(obj))
    report = run_suite(source, lemmas, cfg)
    if out:
        _emit(out, report, lines=False)
    click.echo(_sweep_summary(report), err=bool(not out))
    _warn_parse(source.parse_errors)
    if not report_ok(report):
        raise Found()


def _source(in_path, graphs, n_max, free, strict) -> Source:
    if sum((bool(in_path), bool(graphs), n_max is not None)) != 1:
        raise click.UsageError("give exactly one of --in FILE, --graph ID or --n-max N")
    frees = tuple(x for x in (free or "").split(",") if x.strip())
    if frees:
        try:
            parse_patterns(frees)
        except KeyError as exc:
            raise click.UsageError(str(exc.args[0])) from None
    if n_max is not None:
        if not 1 <= n_max <= ENUM_CAP:
            raise click.UsageError(f"--n-max must be between 1 and {ENUM_CAP}")
        return Source("enumerate", 1, n_max, free=frees)
    if graphs:
        names = tuple(_split_ids(graphs))
        for n in names:
            try:
                catalog.get(n)
            except KeyError as exc:
                raise click.UsageError(str(exc.args[0])) from None
        return Source("named", names=names, free=frees)
    return Source("file", path=in_path, free=frees, strict=strict)


def _lemmas(spec: str) -> list[str]:
    try:
        out = resolve_lemmas(spec)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0])) from None
    if not out:
        raise click.UsageError("--lemma selects nothing")
    return out


@cli.command()
@click.option("--lemma", default="all", show_default=True, envvar=ENV + "LEMMA", help="Lemma id(s), 'all' or 'theorems'.")
@in_opt
@graph_opt
@nmax_opt
@free_opt
@out_opt
@strict_opt
@jobs_opt
@exemplars_opt
@click.pass_obj
def check(obj, lemma, in_path, graphs, n_max, free, out, strict, jobs, exemplars):
    """Check lemmas on given graphs (verdict per line), or on all classes up to --n-max."""
    lemmas = _lemmas(lemma)
    if n_max is not None and not in_path and not graphs:
        _do_sweep(obj, _source(None, (), n_max, free, strict), lemmas, jobs, exemplars, out)
        return
    cfg = _harness(obj)
    errors: list = []
    violations = 0
    pats = [g for _, g in parse_patterns(free)] if free else []

    def recs():
        nonlocal violations
        stream = _inputs(in_path, graphs, strict, errors)
        for it in stream:
            if pats and not next(filter_free([it.graph], pats), None):
                continue
            for lid in lemmas:
                v = check_lemma(lid, it.graph, cfg)
                if v.status == FAILS and LEMMAS[lid].kind == "theorem":
                    violations += 1
                yield {**it.header(), **v.to_dict(it.labels)}

    _emit(out, recs(), lines=True)
    _warn_parse(errors)
    if violations:
        click.echo(f"{violations} theorem violation(s) found", err=True)
        raise Found()


@cli.command()
@click.option("--lemma", default="all", show_default=True, envvar=ENV + "LEMMA")
@in_opt
@graph_opt
@nmax_opt
@free_opt
@click.option("--report", "--out", "out", type=click.Path(dir_okay=False), envvar=ENV + "OUT", help="Write the JSON sweep report here.")
@strict_opt
@jobs_opt
@exemplars_opt
@click.pass_obj
def sweep(obj, lemma, in_path, graphs, n_max, free, out, strict, jobs, exemplars):
    """Run lemmas over a corpus and write a sweep report."""
    _do_sweep(obj, _source(in_path, graphs, n_max, free, strict), _lemmas(lemma), jobs, exemplars, out)


# -- enumerate -------------------------------------------------------------------------------


@cli.command("enumerate")
@click.option("--n", "n", type=int, required=True, help="Number of vertices.")
@free_opt
@out_opt
@click.option("--allow-10", is_flag=True, help="Permit n = 10 (very slow, large output).")
def enumerate_cmd(n, free, out, allow_10):
    """Write one graph6 line per isomorphism class on n vertices."""
    try:
        pats = [g for _, g in parse_patterns(free)] if free else []
        stream = filter_free(enumerate_graphs(n, allow_10=allow_10), pats)
        fh = open(out, "w", encoding="ascii") if out else sys.stdout
        count = 0
        try:
            for g in stream:
                fh.write(to_graph6(g) + "\n")
                count += 1
        finally:
            if out:
                fh.close()
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0])) from None
    except CapabilityError as exc:
        raise click.UsageError(str(exc)) from None
    if out:
        click.echo(f"{count} graphs written to {out}", err=True)


# -- decompose -----------------------------------------------------------------------------


@cli.command()
@in_opt
@graph_opt
@out_opt
@strict_opt
def decompose(in_path, graphs, out, strict):
    """Substitution tree of each {P5, co-P5, bull}-free input graph."""
    errors: list = []
    docs = []
    outside = violations = 0
    for it in _inputs(in_path, graphs, strict, errors):
        rec = {**it.header(), "graph6": to_graph6(it.graph), "n": it.graph.n}
        try:
            tree = decompose_bullfree(it.graph)
            rec["verified"] = verify_decomposition(tree).adj == it.graph.adj
            rec["stats"] = tree_stats(tree)
            rec["tree"] = tree.to_dict()
            violations += not rec["verified"]
        except PreconditionError as exc:
            outside += 1
            rec["error"] = {"kind": "precondition", "clauses": exc.clauses}
        except TheoremViolation as exc:
            violations += 1
            rec["error"] = {"kind": "theorem_violation", "message": str(exc), "evidence": exc.evidence}
        docs.append(rec)
    _warn_parse(errors)
    _emit(out, {"schema": "p5free.decomposition/1", "graphs": docs}, lines=False)
    if violations:
        raise Found()
    if outside:
        click.echo(f"{outside} input graph(s) are not {{P5, P5C, bull}}-free", err=True)
        sys.exit(EXIT_USAGE)


# -- counterexamples ------------------------------------------------------------------------


@cli.group()
def counterexamples():
    """The two published counterexample graphs."""


@counterexamples.command("verify")
@out_opt
@click.option("--no-timing", is_flag=True, help="Omit timings (for reproducible output).")
@click.pass_obj
def counterexamples_verify(obj, out, no_timing):
    """Re-check every published claim about FIG2 and FIG3."""
    batteries = run_batteries(_harness(obj))
    if out:
        _emit(out, {"schema": "p5free.battery/1", "batteries": [b.to_dict(timing=not no_timing) for b in batteries]}, lines=False)
    for b in batteries:
        click.echo(f"{b.graph}: {'confirmed' if b.ok else 'NOT confirmed'} ({b.seconds:.2f} s)")
        for c in b.checks:
            click.echo(f"  [{'ok' if c.ok else 'FAIL'}] {c.claim}")
        for note in b.notes:
            click.echo(f"  note: {note['finding']}")
    if not all(b.ok for b in batteries):
        raise Found()


# -- entry points -----------------------------------------------------------------------------


def run(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        cli.main(args=argv, prog_name="p5free", standalone_mode=False)
    except Found:
        return EXIT_FOUND
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except (OSError, GraphError, CapabilityError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
