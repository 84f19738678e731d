"""Command-line interface: analyze one graph, or scan a family.

analyze prints a full report (spectra, bounds, equality diagnoses) as a text
table or canonical JSON. scan sweeps the margin between the two trace-style
upper bounds over an enumerated range or a graph6 file. JSON output is
canonical: sorted keys, two-space indent, shortest-round-trip floats, so
serializing, parsing, and serializing again is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import metadata

from .bounds import BoundId, Side, Target, compute_all_bounds
from .certify import check_han_multiplicity, check_tree_determinant
from .errors import (
    ConsistencyError, ConvergenceError, DisconnectedGraphError,
    GraphParseError, NotApplicableError, TheoremViolationError)
from .graph6 import parse_graph6, read_graph6_stream
from .graphs import (
    enumerate_connected, parse_edge_list, transmission_regularity)
from .named_graphs import FIXTURES, builtin_graph, fixture_graph
from .scan import scan_conjecture

SCHEMA_VERSION = 1

L_TABLE = (BoundId.L_I1, BoundId.L_D1, BoundId.L_D2,
           BoundId.L_N1, BoundId.L_N2, BoundId.L_N3)
Q_LOWER_TABLE = (BoundId.Q_I3, BoundId.Q_I5, BoundId.Q_CI5)
Q_UPPER_TABLE = (BoundId.Q_I4, BoundId.Q_I6, BoundId.Q_I2,
                 BoundId.Q_CS6, BoundId.Q_CS7)


def fmt4(x):
    """Four decimals, bankers rounding, trailing zeros stripped."""
    if x is None:
        return "n/a"
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    if s in ("-0", ""):
        s = "0"
    return s


def to_canonical_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def resolve_graph_input(arg):
    """Turn a CLI graph argument into a Graph.

    Tried in order: an existing file (suffix .g6/.graph6 means graph6, first
    graph of the stream; anything else is parsed as an edge list), a builtin
    name like K5/P4/C6/S5, a shipped fixture name, and finally a literal
    graph6 string.
    """
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
        if arg.endswith((".g6", ".graph6")):
            for _, g in read_graph6_stream(text.splitlines()):
                return g
            raise GraphParseError(f"no graph6 data in {arg}")
        return parse_edge_list(text)
    g = builtin_graph(arg)
    if g is not None:
        return g
    if arg in FIXTURES:
        return fixture_graph(arg)
    return parse_graph6(arg)


def _diagnosis_dict(diag):
    if diag is None:
        return None
    return {"equality_within_tol": diag.equality_within_tol,
            "certificate": diag.certificate}


def report_document(report, target="both"):
    """JSON-ready dict for one analyzed graph."""
    data = report.data
    bounds = []
    for entry in report.entries:
        if target == "L" and entry.target is not Target.L:
            continue
        if target == "Q" and entry.target is not Target.Q:
            continue
        bounds.append({
            "id": entry.bound_id.value,
            "target": entry.target.value,
            "side": entry.side.value,
            "applicable": entry.applicable,
            "value": entry.value,
            "satisfied": entry.satisfied,
            "gap": entry.gap,
            "equality": _diagnosis_dict(entry.diagnosis),
        })
    try:
        han = check_han_multiplicity(report.spectrum_l, report.graph)
    except NotApplicableError:
        han = None
    try:
        tree_det = check_tree_determinant(report.graph, data)
    except NotApplicableError:
        tree_det = None
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": {
            "n": report.graph.n,
            "edge_count": report.graph.edge_count,
            "edges": [[u, v] for u, v in report.graph.sorted_edges()],
            "graph6": report.graph6,
        },
        "transmissions": [int(t) for t in data.tr],
        "wiener": data.wiener,
        "transmission_regular": transmission_regularity(data),
        "spectra": {
            "distance": [float(v) for v in report.spectrum_d.values],
            "distance_laplacian": [float(v) for v in report.spectrum_l.values],
            "distance_signless_laplacian":
                [float(v) for v in report.spectrum_q.values],
        },
        "radius": {
            "distance_laplacian": report.radius_l,
            "distance_signless_laplacian": report.radius_q,
        },
        "checks": {
            "han_multiplicity": han,
            "tree_determinant": tree_det,
        },
        "bounds": bounds,
        "timing_ms": report.timing_ms,
    }


def _row(cells, width=10):
    return "  ".join(str(c).ljust(width) for c in cells).rstrip()


def _bound_block(report, ids):
    names = [bid.value for bid in ids]
    values = [fmt4(report.entry(bid).value) for bid in ids]
    width = max(len(s) for s in names + values)
    return [_row(names, width), _row(values, width)]


def report_table(report, target="both"):
    data = report.data
    regular = transmission_regularity(data)
    lines = []
    lines.append(
        f"graph: n={report.graph.n} edges={report.graph.edge_count} "
        f"graph6={report.graph6}")
    lines.append(
        f"wiener={data.wiener} transmissions in [{int(data.tr.min())}, "
        f"{int(data.tr.max())}] transmission-regular="
        + ("yes" if regular is not None else "no"))
    lines.append(f"radius: L={fmt4(report.radius_l)} Q={fmt4(report.radius_q)}")
    if target in ("L", "both"):
        lines.append("")
        lines.append("L spectrum: " + ", ".join(
            fmt4(v) for v in report.spectrum_l.values))
        lines.append("L upper bounds:")
        lines.extend("  " + s for s in _bound_block(report, L_TABLE))
        r1 = report.entry(BoundId.L_R1)
        r2 = report.entry(BoundId.L_R2)
        if r1.applicable:
            lines.append(
                f"transmission-regular bounds: r1={fmt4(r1.value)} "
                f"r2={fmt4(r2.value)}")
    if target in ("Q", "both"):
        lines.append("")
        lines.append("Q spectrum: " + ", ".join(
            fmt4(v) for v in report.spectrum_q.values))
        lines.append("Q lower bounds:")
        lines.extend("  " + s for s in _bound_block(report, Q_LOWER_TABLE))
        lines.append("Q upper bounds:")
        lines.extend("  " + s for s in _bound_block(report, Q_UPPER_TABLE))
        lo = report.entry(BoundId.Q_TB_LO)
        up = report.entry(BoundId.Q_TB_UP)
        lines.append(
            f"transmission interval: [{fmt4(lo.value)}, {fmt4(up.value)}]")
    fired = [
        f"{e.bound_id.value}:{e.diagnosis.certificate}"
        for e in report.entries
        if e.diagnosis is not None and e.diagnosis.equality_within_tol]
    lines.append("")
    lines.append("equalities: " + (", ".join(sorted(set(fired))) or "none"))
    return "\n".join(lines) + "\n"


def cmd_analyze(arg, fmt="table", target="both"):
    """Returns (exit_code, stdout text)."""
    g = resolve_graph_input(arg)
    report = compute_all_bounds(g)
    if fmt == "json":
        return 0, to_canonical_json(report_document(report, target))
    return 0, report_table(report, target)


def scan_document(result, params):
    return {
        "schema_version": SCHEMA_VERSION,
        "scan": {
            "kind": "margin",
            "params": params,
            "graphs_tested": result.graphs_tested,
            "skipped_regular": result.skipped_regular,
            "min_margin": result.min_margin,
            "has_counterexamples": bool(result.counterexamples),
            "counterexamples": [list(c) for c in result.counterexamples],
            "equalities_within_tolerance": [list(c) for c in result.equalities],
            "histogram": result.histogram,
            "errors": [list(e) for e in result.errors],
        },
    }


def scan_table(result, params):
    lines = [
        f"scan: {params}",
        f"graphs tested: {result.graphs_tested} "
        f"(skipped transmission-regular: {result.skipped_regular})",
        f"min margin: "
        + ("n/a" if result.min_margin is None else f"{result.min_margin:.6f}"),
        "margin histogram:",
    ]
    for label, count in result.histogram.items():
        lines.append(f"  {label:>9}: {count}")
    if result.counterexamples:
        lines.append(f"strict counterexamples: {len(result.counterexamples)}")
        for enc, n3, d2 in result.counterexamples:
            lines.append(f"  {enc}: trace-bound {n3!r} vs strict-bound {d2!r}")
    else:
        lines.append("strict counterexamples: none")
    if result.equalities:
        lines.append(
            f"equalities within tolerance: {len(result.equalities)}")
        for enc, n3, d2 in result.equalities:
            lines.append(f"  {enc}: trace-bound {n3!r} vs strict-bound {d2!r}")
    if result.errors:
        lines.append(f"per-graph errors: {len(result.errors)}")
        for enc, msg in result.errors:
            lines.append(f"  {enc}: {msg}")
    return "\n".join(lines) + "\n"


def cmd_scan(enumerate_n=None, graph6_path=None, slack=1e-7, dedup=False,
             fmt="table"):
    """Returns (exit_code, stdout text). Exit stays 0 even with
    counterexamples; the output carries the distinction."""
    if (enumerate_n is None) == (graph6_path is None):
        raise ValueError("exactly one of --enumerate and --graph6 is required")
    if enumerate_n is not None:
        if enumerate_n < 3:
            raise ValueError(
                f"margin scan needs n >= 3, got n={enumerate_n}")
        source = enumerate_connected(enumerate_n, dedup=dedup)
        params = {"enumerate": enumerate_n, "dedup": dedup, "slack": slack}
        result = scan_conjecture(source, slack=slack)
    else:
        params = {"graph6": os.path.basename(graph6_path), "slack": slack}
        with open(graph6_path, encoding="utf-8") as fh:
            source = (g for _, g in read_graph6_stream(fh))
            result = scan_conjecture(source, slack=slack)
    if fmt == "json":
        return 0, to_canonical_json(scan_document(result, params))
    return 0, scan_table(result, params)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="distlap",
        description="Distance Laplacian / signless Laplacian spectra, "
                    "spectral-radius bounds, and margin scans.")
    parser.add_argument(
        "--version", action="version",
        version=f"%(prog)s {metadata.version('distlap')}")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser(
        "analyze", help="full bound report for one connected graph")
    a.add_argument(
        "input",
        help="edge-list or .g6 file, builtin (K5, P4, C6, S5), fixture name "
             f"({', '.join(FIXTURES)}), or literal graph6 string")
    a.add_argument("--format", choices=("table", "json"), default="table")
    a.add_argument("--target", choices=("L", "Q", "both"), default="both")

    s = sub.add_parser(
        "scan", help="margin scan between the two trace-style upper bounds")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument(
        "--enumerate", type=int, metavar="N", dest="enumerate_n",
        help="all connected labeled graphs on N vertices (3 <= N <= 7)")
    src.add_argument("--graph6", metavar="PATH", help="graph6 file, one per line")
    s.add_argument("--slack", type=float, default=1e-7)
    s.add_argument(
        "--dedup", action="store_true",
        help="collapse isomorphic duplicates (with --enumerate)")
    s.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            code, text = cmd_analyze(
                args.input, fmt=args.format, target=args.target)
        else:
            if args.dedup and args.enumerate_n is None:
                parser.error("--dedup requires --enumerate")
            code, text = cmd_scan(
                enumerate_n=args.enumerate_n, graph6_path=args.graph6,
                slack=args.slack, dedup=args.dedup, fmt=args.format)
    except (GraphParseError, DisconnectedGraphError, NotApplicableError,
            ValueError, OSError) as exc:
        print(f"distlap: error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, ConvergenceError, TheoremViolationError) as exc:
        print(f"distlap: internal check failed: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
