"""Command-line front end.

``<input>`` is a file of graph6 records (one per line), ``-`` for stdin, or a
literal graph6 record.  With ``--edges`` the input holds one graph in the
``n m`` / ``u v`` edge-list format instead.

Exit codes: 0 success, 1 verification found violations, 2 malformed input,
3 a disconnected graph was passed to ``decide`` or ``iterate``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .bicliques import enumerate_bicliques
from .deciders import METHODS, DisconnectedGraphError, decide
from .graph import (
    Graph,
    GraphFormatError,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    twin_reduce,
)
from .harness import GraphRecord, RunReport, exhaustive_verify
from .kb import DIVERGENT_BICLIQUE_COUNT, BudgetExceeded, Converged, ShortcutDiverges, iterate_kb, kb

EXIT_VIOLATIONS = 1
EXIT_MALFORMED = 2
EXIT_DISCONNECTED = 3


def _read_inputs(source: str, edges: bool) -> list[tuple[str, Graph]]:
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    elif edges:
        raise GraphFormatError(f"no such file: {source}")
    else:
        text = source
    if edges:
        g = parse_edge_list(text)
        return [(to_graph6(g), g)]
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append((line, parse_graph6(line)))
        except GraphFormatError as e:
            raise GraphFormatError(str(e), lineno) from None
    if not out:
        raise GraphFormatError("no graph records in input")
    return out


def _emit(args, payload: list[dict], lines: list[str]) -> None:
    if args.json:
        json.dump(payload[0] if len(payload) == 1 else payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for ln in lines:
            print(ln)


def _cmd_bicliques(args, graphs) -> int:
    payload, lines = [], []
    for gid, g in graphs:
        fam = enumerate_bicliques(g)
        if len(graphs) > 1:
            lines.append(f"# {gid}")
        lines.extend(str(b) for b in fam)
        lines.append(f"total: {len(fam)}")
        payload.append({"input": gid, "bicliques": [[list(b.a), list(b.b)] for b in fam],
                        "total": len(fam)})
    _emit(args, payload, lines)
    return 0


def _cmd_kb(args, graphs) -> int:
    payload, lines = [], []
    for gid, g in graphs:
        res = kb(g)
        code = to_graph6(res.graph) if res.graph.n else ""
        if len(graphs) > 1:
            lines.append(f"# {gid}")
        lines.append(f"graph6: {code}")
        lines.extend(f"{i}: {b}" for i, b in enumerate(res.family))
        payload.append({"input": gid, "graph6": code,
                        "legend": [[list(b.a), list(b.b)] for b in res.family]})
    _emit(args, payload, lines)
    return 0


def _cmd_iterate(args, graphs) -> int:
    payload, lines = [], []
    status = 0
    for gid, g in graphs:
        if len(graphs) > 1:
            lines.append(f"# {gid}")
        if g.n == 0 or not is_connected(g):
            lines.append("error: disconnected graph")
            payload.append({"input": gid, "error": "disconnected"})
            status = EXIT_DISCONNECTED
            continue
        budget = max(args.budget, g.n)
        traj = iterate_kb(g, args.steps, budget, None if args.no_shortcut else DIVERGENT_BICLIQUE_COUNT)
        lines.append("step\tvertices\tbicliques")
        for rec in traj.steps:
            nb = "-" if rec.bicliques is None else str(rec.bicliques)
            lines.append(f"{rec.step}\t{rec.vertices}\t{nb}")
        out = traj.outcome
        if isinstance(out, Converged):
            desc = f"converged limit={out.limit} at_step={out.at_step}"
        elif isinstance(out, ShortcutDiverges):
            desc = f"diverges: step {out.at_step} has at least {out.bicliques} bicliques"
        elif isinstance(out, BudgetExceeded):
            desc = f"budget exceeded: {out.which} at_step={out.at_step}"
        else:
            desc = "incomplete"
        lines.append(f"outcome: {desc}")
        payload.append({
            "input": gid,
            "steps": [{"step": r.step, "vertices": r.vertices, "bicliques": r.bicliques}
                      for r in traj.steps],
            "outcome": desc,
        })
    _emit(args, payload, lines)
    return status


def _cmd_decide(args, graphs) -> int:
    report = RunReport()
    lines = []
    status = 0
    for gid, g in graphs:
        t0 = time.perf_counter()
        try:
            b = decide(g, args.method)
            err = None
        except DisconnectedGraphError:
            b, err = None, "disconnected"
            status = EXIT_DISCONNECTED
        rec = GraphRecord(gid, args.method, b, None, time.perf_counter() - t0, err)
        report.records.append(rec)
        text = str(b) if b else f"error: {err}"
        lines.append(f"{gid}\t{text}" if len(graphs) > 1 else text)
    if args.json:
        recs = [r.to_dict(timings=not args.no_timings) for r in report.records]
        json.dump(recs[0] if len(recs) == 1 else recs, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for ln in lines:
            print(ln)
    return status


def _cmd_twins(args, graphs) -> int:
    payload, lines = [], []
    for gid, g in graphs:
        tr = twin_reduce(g)
        if len(graphs) > 1:
            lines.append(f"# {gid}")
        lines.extend(" ".join(map(str, c)) for c in tr.classes)
        payload.append({"input": gid, "classes": [list(c) for c in tr.classes]})
    _emit(args, payload, lines)
    return 0


def _cmd_reduce(args, graphs) -> int:
    payload, lines = [], []
    for gid, g in graphs:
        tr = twin_reduce(g)
        code = to_graph6(tr.reduced)
        lines.append(f"{gid}\t{code}" if len(graphs) > 1 else code)
        payload.append({"input": gid, "reduced": code, "representatives": list(tr.representatives)})
    _emit(args, payload, lines)
    return 0


def _cmd_verify(args) -> int:
    report = exhaustive_verify(args.max_n, jobs=args.jobs)
    if args.json:
        json.dump(report.to_dict(timings=not args.no_timings), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(f"graphs scanned: {report.scanned}")
        for n, c in sorted(report.per_n.items()):
            print(f"n={n}: connected={c['connected']} classes={c['classes']} "
                  f"diverges={c['diverges']} converges={c['converges']} twin_free={c['twin_free']}")
        print(f"divergent fraction: {report.divergent_fraction:.6f}")
        for prop, k in report.checks.items():
            bad = sum(v["property"] == prop for v in report.violations)
            print(f"{prop}: {k} checks, {bad} violations")
        for v in report.violations[:50]:
            print(f"VIOLATION {v['property']} n={v['n']} {v['graph6']}: {v['detail']}")
        if not args.no_timings:
            print(f"seconds: {report.seconds:.1f}")
    return 0 if report.ok else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kbdynamics", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="graph6 file, '-' for stdin, or a graph6 record")
        sp.add_argument("--edges", action="store_true", help="input is an edge list")
        sp.add_argument("--json", action="store_true")
        return sp

    graph_cmd("bicliques", "list every biclique as 'A | B'")
    graph_cmd("kb", "emit KB(G) as graph6 with its vertex legend")
    sp = graph_cmd("iterate", "iterate KB and tabulate the trajectory")
    sp.add_argument("--steps", type=int, default=8)
    sp.add_argument("--budget", type=int, default=200)
    sp.add_argument("--no-shortcut", action="store_true",
                    help="do not stop when an iterate has seven bicliques")
    sp = graph_cmd("decide", "classify as convergent or divergent")
    sp.add_argument("--method", choices=METHODS, default="linear")
    sp.add_argument("--no-timings", action="store_true")
    graph_cmd("twins", "list false-twin classes")
    graph_cmd("reduce", "emit Tw(G) as graph6")
    sp = sub.add_parser("verify", help="exhaustive property sweep over small graphs")
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-timings", action="store_true")
    return p


_COMMANDS = {
    "bicliques": _cmd_bicliques,
    "kb": _cmd_kb,
    "iterate": _cmd_iterate,
    "decide": _cmd_decide,
    "twins": _cmd_twins,
    "reduce": _cmd_reduce,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        if not 1 <= args.max_n <= 7:
            print("error: --max-n must be between 1 and 7", file=sys.stderr)
            return EXIT_MALFORMED
        return _cmd_verify(args)
    try:
        graphs = _read_inputs(args.input, args.edges)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        return _COMMANDS[args.command](args, graphs)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
