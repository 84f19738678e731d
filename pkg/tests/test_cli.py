"""CLI surface: input resolution, JSON canonicality, tables, exit codes."""

import json

import pytest

from distlap import Graph, encode_graph6, format_edge_list
from distlap.cli import (
    cmd_analyze, cmd_scan, fmt4, main, report_document, resolve_graph_input,
    to_canonical_json)
from distlap.errors import GraphParseError
from distlap.named_graphs import (
    complete_graph, cycle_graph, fixture_graph, path_graph, star_graph)


def test_fmt4():
    assert fmt4(None) == "n/a"
    assert fmt4(36.744563) == "36.7446"
    assert fmt4(48.0) == "48"
    assert fmt4(0.25) == "0.25"
    assert fmt4(-0.000001) == "0"
    assert fmt4(-1.5) == "-1.5"
    assert fmt4(184.0) == "184"


def test_resolve_builtins_and_fixtures():
    assert resolve_graph_input("K5") == complete_graph(5)
    assert resolve_graph_input("P4") == path_graph(4)
    assert resolve_graph_input("C6") == cycle_graph(6)
    assert resolve_graph_input("S5") == star_graph(5)
    assert resolve_graph_input("g1") == fixture_graph("g1")
    assert resolve_graph_input("Bw") == complete_graph(3)  # literal graph6


def test_resolve_files(tmp_path):
    edges = tmp_path / "square.txt"
    edges.write_text(format_edge_list(cycle_graph(4)), encoding="utf-8")
    assert resolve_graph_input(str(edges)) == cycle_graph(4)
    g6 = tmp_path / "some.g6"
    g6.write_text(encode_graph6(path_graph(5)) + "\n", encoding="utf-8")
    assert resolve_graph_input(str(g6)) == path_graph(5)
    empty = tmp_path / "empty.g6"
    empty.write_text("\n", encoding="utf-8")
    with pytest.raises(GraphParseError, match="no graph6 data"):
        resolve_graph_input(str(empty))


def test_resolve_garbage_is_a_parse_error():
    with pytest.raises(GraphParseError):
        resolve_graph_input("this is not anything!")


def test_json_reserialization_is_byte_identical():
    for args in (("ex1",), ("g2", "json", "Q"), ("K4", "json", "L")):
        code, text = cmd_analyze(args[0], fmt="json")
        assert code == 0
        doc = json.loads(text)
        assert to_canonical_json(doc) == text


def test_analyze_json_document_shape():
    code, text = cmd_analyze("ex1", fmt="json")
    doc = json.loads(text)
    assert doc["schema_version"] == 1
    assert doc["graph"]["n"] == 5
    assert doc["graph"]["edge_count"] == 7
    assert doc["wiener"] == 13
    assert doc["transmission_regular"] is None
    assert len(doc["spectra"]["distance_laplacian"]) == 5
    assert doc["radius"]["distance_laplacian"] == pytest.approx(8.4142, abs=5e-4)
    assert doc["checks"]["tree_determinant"] is None  # not a tree
    assert doc["checks"]["han_multiplicity"] is True
    assert len(doc["bounds"]) == 18
    by_id = {b["id"]: b for b in doc["bounds"]}
    assert by_id["L_R1"]["applicable"] is False
    assert by_id["L_R1"]["value"] is None
    assert by_id["L_N3"]["equality"] == {
        "equality_within_tol": False, "certificate": "none"}
    assert by_id["L_I1"]["equality"] is None  # no characterization attached


def test_analyze_target_filters_bounds():
    _, text = cmd_analyze("P4", fmt="json", target="L")
    ids = [b["id"] for b in json.loads(text)["bounds"]]
    assert ids == ["L_I1", "L_D1", "L_D2", "L_N1", "L_N2", "L_N3",
                   "L_R1", "L_R2"]
    _, text = cmd_analyze("P4", fmt="json", target="Q")
    ids = [b["id"] for b in json.loads(text)["bounds"]]
    assert all(i.startswith("Q") for i in ids) and len(ids) == 10


def test_analyze_table_content():
    _, text = cmd_analyze("ex1")
    assert "graph: n=5 edges=7" in text
    assert "radius: L=8.4142 Q=10.7417" in text
    assert "transmission-regular=no" in text
    assert "equalities: none" in text
    _, text = cmd_analyze("ex2")
    assert "transmission-regular=yes" in text
    assert "transmission-regular bounds: r1=21.874 r2=21.4782" in text
    assert "Q_TB_UP:transmission-regular" in text
    _, text = cmd_analyze("K4")
    assert "L_N3:complete-graph" in text


def test_analyze_table_target_sections():
    _, text = cmd_analyze("P4", target="L")
    assert "L upper bounds:" in text
    assert "Q lower bounds:" not in text
    _, text = cmd_analyze("P4", target="Q")
    assert "Q upper bounds:" in text
    assert "L upper bounds:" not in text


def test_scan_enumerate_json():
    code, text = cmd_scan(enumerate_n=4, fmt="json")
    assert code == 0
    doc = json.loads(text)["scan"]
    assert doc["graphs_tested"] == 34
    assert doc["skipped_regular"] == 4
    assert doc["has_counterexamples"] is False
    assert doc["counterexamples"] == []
    assert len(doc["equalities_within_tolerance"]) == 4
    assert doc["min_margin"] == 0.0
    assert to_canonical_json(json.loads(text)) == text


def test_scan_finds_counterexamples_with_exit_zero():
    code, text = cmd_scan(enumerate_n=5, fmt="json")
    assert code == 0  # a finding, not a failure
    doc = json.loads(text)["scan"]
    assert doc["has_counterexamples"] is True
    assert len(doc["counterexamples"]) == 5


def test_scan_graph6_file(tmp_path):
    path = tmp_path / "family.g6"
    lines = [encode_graph6(fixture_graph(n)) for n in ("g1", "g2", "g3")]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    code, text = cmd_scan(graph6_path=str(path), fmt="json")
    assert code == 0
    doc = json.loads(text)["scan"]
    assert doc["graphs_tested"] == 3
    assert doc["min_margin"] == pytest.approx(0.712478, abs=5e-4)
    assert doc["params"]["graph6"] == "family.g6"


def test_scan_table_output():
    code, text = cmd_scan(enumerate_n=5)
    assert code == 0
    assert "graphs tested: 715 (skipped transmission-regular: 13)" in text
    assert "strict counterexamples: 5" in text
    assert "min margin: -0.312182" in text


def test_cmd_scan_argument_validation():
    with pytest.raises(ValueError, match="exactly one"):
        cmd_scan()
    with pytest.raises(ValueError, match="exactly one"):
        cmd_scan(enumerate_n=4, graph6_path="x.g6")
    with pytest.raises(ValueError, match="n >= 3"):
        cmd_scan(enumerate_n=2)


def test_main_exit_codes(capsys):
    assert main(["analyze", "Bw"]) == 0
    assert "graph: n=3" in capsys.readouterr().out

    assert main(["analyze", "definitely not a graph"]) == 2
    assert "error" in capsys.readouterr().err

    assert main(["scan", "--enumerate", "2"]) == 2
    assert "n >= 3" in capsys.readouterr().err

    assert main(["scan", "--enumerate", "3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["scan"]["graphs_tested"] == 3
    assert doc["scan"]["skipped_regular"] == 1


def test_main_analyze_disconnected_edge_list(tmp_path, capsys):
    path = tmp_path / "split.txt"
    path.write_text("4\n0 1\n2 3\n", encoding="utf-8")
    assert main(["analyze", str(path)]) == 2
    assert "disconnected" in capsys.readouterr().err


def test_main_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("distlap ")


def test_scan_dedup_matches_class_count():
    code, text = cmd_scan(enumerate_n=5, dedup=True, fmt="json")
    assert code == 0
    doc = json.loads(text)["scan"]
    # 21 connected classes on 5 vertices, 2 transmission-regular (C5, K5)
    assert doc["graphs_tested"] + doc["skipped_regular"] == 21
    assert doc["skipped_regular"] == 2
    assert len(doc["counterexamples"]) == 1  # the star, once
