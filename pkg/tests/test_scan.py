"""Conjecture margin sweeps and the soundness sweep."""

import math
import random

import pytest

from distlap import (
    Graph, enumerate_connected, scan_conjecture, scan_soundness)
from distlap.errors import ConsistencyError
from distlap.named_graphs import (
    complete_graph, cycle_graph, fixture_graph, star_graph)
from oracles import labeled_connected_count


def test_star5_is_a_strict_counterexample():
    # exact arithmetic: trace bound 8 + 3 = 11, strict bound 7 + sqrt(13.6)
    r = scan_conjecture([star_graph(5)])
    assert r.graphs_tested == 1
    assert len(r.counterexamples) == 1
    g6, trace_bound, strict_bound = r.counterexamples[0]
    assert trace_bound == pytest.approx(11.0, abs=1e-12)
    assert strict_bound == pytest.approx(7 + math.sqrt(13.6), abs=1e-12)
    assert r.min_margin == pytest.approx(math.sqrt(13.6) - 4, abs=1e-12)
    assert r.histogram["< 0"] == 1


def test_star4_is_equality_not_counterexample():
    # both bounds equal 8 exactly on this tree
    r = scan_conjecture([star_graph(4)])
    assert r.min_margin == 0.0
    assert r.counterexamples == []
    assert len(r.equalities) == 1
    assert r.histogram["[0, 0.5)"] == 1


def test_transmission_regular_graphs_are_skipped():
    r = scan_conjecture([cycle_graph(5), complete_graph(4)])
    assert r.graphs_tested == 0
    assert r.skipped_regular == 2
    assert r.min_margin is None
    assert r.counterexamples == [] and r.equalities == []


def test_error_records_instead_of_raises():
    r = scan_conjecture([
        Graph.from_edges(2, [(0, 1)]),          # too small
        Graph(4, frozenset({(0, 1), (2, 3)})),  # disconnected
        star_graph(4),
    ])
    assert r.graphs_tested == 1
    assert len(r.errors) == 2
    messages = sorted(msg for _, msg in r.errors)
    assert any("n >= 3" in m for m in messages)
    assert any("disconnected" in m.lower() or "not connected" in m.lower()
               for m in messages)


def test_full_sweep_n4():
    r = scan_conjecture(enumerate_connected(4))
    assert r.graphs_tested + r.skipped_regular == labeled_connected_count(4)
    assert r.skipped_regular == 4  # labeled 4-cycles and the complete graph
    assert r.counterexamples == []
    assert len(r.equalities) == 4  # the labeled stars
    assert r.min_margin == 0.0
    assert sum(r.histogram.values()) == r.graphs_tested


def test_full_sweep_n5_finds_the_stars():
    r = scan_conjecture(enumerate_connected(5))
    assert r.graphs_tested + r.skipped_regular == labeled_connected_count(5)
    assert len(r.counterexamples) == 5  # one per hub choice
    assert r.min_margin == pytest.approx(math.sqrt(13.6) - 4, abs=1e-12)
    # every counterexample is a labeled copy of the 4-spoke star
    star_margin = math.sqrt(13.6) - 4
    for _, trace_bound, strict_bound in r.counterexamples:
        assert strict_bound - trace_bound == pytest.approx(star_margin, abs=1e-12)


def test_scan_is_stream_order_independent():
    graphs = list(enumerate_connected(5))
    shuffled = graphs[:]
    random.Random(11).shuffle(shuffled)
    a = scan_conjecture(graphs)
    b = scan_conjecture(shuffled)
    assert a.counterexamples == b.counterexamples
    assert a.equalities == b.equalities
    assert a.min_margin == b.min_margin
    assert a.histogram == b.histogram


def test_slack_reclassifies_but_keeps_consistency():
    r = scan_conjecture([star_graph(5)], slack=1.0)
    assert r.counterexamples == []
    assert len(r.equalities) == 1  # negative margin within the wide slack
    assert r.min_margin < 0
    assert r.slack == 1.0


def test_fixture_margins_are_positive():
    expect = {"g1": 0.712478, "g2": 2.176383, "g3": 1.372182}
    for name, want in expect.items():
        r = scan_conjecture([fixture_graph(name)])
        assert r.min_margin == pytest.approx(want, abs=5e-4), name


def test_soundness_clean_small_n():
    for n in range(1, 5):
        rep = scan_soundness(enumerate_connected(n))
        assert rep.graphs_checked == labeled_connected_count(n)
        assert rep.violations == []
        assert rep.errors == []


def test_soundness_clean_on_fixtures():
    rep = scan_soundness(fixture_graph(name)
                         for name in ("ex1", "ex2", "g1", "g2", "g3"))
    assert rep.graphs_checked == 5
    assert rep.violations == []


def test_soundness_records_disconnected_as_error():
    rep = scan_soundness([Graph(4, frozenset({(0, 1), (2, 3)}))])
    assert rep.graphs_checked == 0
    assert len(rep.errors) == 1
