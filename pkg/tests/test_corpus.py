import json
import logging
import random

import pytest

from p5free import catalog
from p5free.corpus import (
    Source,
    SweepConfig,
    enumerate_graphs,
    filter_free,
    random_graph,
    report_ok,
    run_suite,
)
from p5free.errors import CapabilityError
from p5free.formats import from_graph6, to_graph6, write_graph6
from p5free.graph import complement
from p5free.iso import canonical_form
from p5free.patterns import contains
from p5free.theorems import HarnessConfig, check_lemma
from p5free.validate import validate_verdict

from .oracles import burnside_count, induced_copies, labelled_classes


def test_small_counts_against_labelled_oracle():
    for n in range(1, 6):
        assert len(list(enumerate_graphs(n))) == labelled_classes(n)


def test_counts_against_burnside_and_distinctness(classes_upto_7):
    for n, gs in classes_upto_7.items():
        assert len(gs) == burnside_count(n)
        assert len({canonical_form(g) for g in gs}) == len(gs)


def test_augmentation_matches_dedup():
    for n in range(2, 8):
        a = {canonical_form(g) for g in enumerate_graphs(n, method="dedup")}
        b = [canonical_form(g) for g in enumerate_graphs(n, method="augment")]
        assert len(b) == len(set(b)) and set(b) == a


def test_enumeration_caps(caplog):
    with pytest.raises(CapabilityError):
        list(enumerate_graphs(0))
    with pytest.raises(CapabilityError):
        next(enumerate_graphs(10))
    with caplog.at_level(logging.WARNING, logger="p5free.corpus"):
        next(enumerate_graphs(10, allow_10=True))
    assert "n = 10" in caplog.text


def test_filter_free():
    five = list(enumerate_graphs(5))
    kept = list(filter_free(five, [catalog.P5(), catalog.P5C(), catalog.C5()]))
    assert catalog.C5() not in kept and catalog.P5() not in kept
    assert len(kept) == 31
    assert list(filter_free(five, [])) == five
    brute = [g for g in five if not induced_copies(g, catalog.P5()) and not induced_copies(complement(g), catalog.P5())]
    assert len(list(filter_free(five, [catalog.P5(), catalog.P5C()]))) == len(brute)


def test_random_graph():
    assert random_graph(6, 0.0, 1).num_edges() == 0
    assert random_graph(6, 1.0, 1).num_edges() == 15
    assert random_graph(9, 0.5, "x") == random_graph(9, 0.5, "x")
    # documented algorithm: one draw per pair in lexicographic order
    rng = random.Random(42)
    expected = [(i, j) for i in range(5) for j in range(i + 1, 5) if rng.random() < 0.3]
    assert random_graph(5, 0.3, 42).edges() == expected
    with pytest.raises(ValueError):
        random_graph(3, 1.5, 0)


def test_sand_a_sweep_up_to_six():
    r = run_suite(Source("enumerate", 1, 6), ["SAND_A"])
    assert r["totals"]["SAND_A"]["fails"] == 0
    assert sum(sum(b.values()) for b in r["counts"]["SAND_A"].values()) == r["graphs"] == 1 + 2 + 4 + 11 + 34 + 156
    for key, n in r["graphs_per_n"].items():
        assert sum(r["counts"]["SAND_A"][key].values()) == n
    assert report_ok(r)


def test_named_sweep_finds_refutations():
    r = run_suite(Source("named", names=("FIG2",)), ["H6_CONJ"])
    assert r["totals"]["H6_CONJ"]["fails"] == 1
    assert r["refutations"]["expected_confirmed"] == ["H6_CONJ:FIG2"]
    assert report_ok(r)
    r = run_suite(Source("named", names=("FIG3",)), ["CONJ_1_6"])
    assert [m["name"] for m in r["refutations"]["expected_missing"]] == ["FIG3"]
    assert not report_ok(r)


def test_file_sweep_identifies_manifest_graphs(tmp_path):
    p = tmp_path / "g.g6"
    write_graph6([catalog.C5(), catalog.FIG2().graph], p)
    r = run_suite(Source("file", path=str(p)), ["H6_CONJ", "CONJ_1_6"])
    ents = r["refutations"]["entries"]
    assert {(e["lemma"], e["identified_as"], e["expected"]) for e in ents} == {
        ("H6_CONJ", "FIG2", True),
        ("CONJ_1_6", "FIG2", False),
    }
    assert r["refutations"]["new"] == 1


def test_empty_file_gives_zero_report(tmp_path):
    p = tmp_path / "empty.g6"
    p.write_text("")
    r = run_suite(Source("file", path=str(p)), ["SAAS"])
    assert r["graphs"] == 0 and r["totals"]["SAAS"] == {"holds": 0, "fails": 0, "precondition_not_met": 0}


def test_malformed_lines(tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("Dhc\nnot graph6!\nC~\n")
    src = Source("file", path=str(p))
    r = run_suite(src, ["SPLIT_IFF"])
    assert r["graphs"] == 2 and r["parse_errors"][0]["line"] == 2
    with pytest.raises(Exception, match="line 2"):
        run_suite(Source("file", path=str(p), strict=True), ["SPLIT_IFF"])


def test_exemplars_revalidate():
    r = run_suite(Source("enumerate", 4, 6), ["SAAS", "PRIME_HAS_P4"], SweepConfig(exemplars=2))
    for lid, rows in r["exemplars"].items():
        assert len(rows) == 2
        for row in rows:
            g = from_graph6(row["graph6"])
            assert row["verdict"]["status"] == "holds"
            v = check_lemma(lid, g)
            assert v.to_dict() == row["verdict"] and validate_verdict(v, g)


def test_config_echo_and_parallel_merge():
    cfg1 = SweepConfig(jobs=1, chunk_size=17, harness=HarnessConfig(seed=3))
    cfg3 = SweepConfig(jobs=3, chunk_size=17, harness=HarnessConfig(seed=3))
    src = Source("enumerate", 1, 6, free=("p5",))
    a = run_suite(src, ["MIXED_PAIR", "SPLIT_IFF"], cfg1)
    b = run_suite(src, ["MIXED_PAIR", "SPLIT_IFF"], cfg3)
    assert a["config"]["seed"] == 3 and a["source"]["free"] == ["p5"]
    for r in (a, b):
        r.pop("wall_time_s")
        r["config"].pop("jobs")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_free_filter_in_source():
    r = run_suite(Source("enumerate", 5, 5, free=("p5", "p5c", "c5")), ["SPLIT_IFF"])
    assert r["graphs"] == 31
    assert all(not contains(g, catalog.P5()) for g in filter_free(enumerate_graphs(5), [catalog.P5()]))
    assert to_graph6(catalog.C5()) not in json.dumps(r)
