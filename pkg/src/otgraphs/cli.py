"""Command line interface: ``otgraphs <command> ...``.

Exit status is 0 on success, 1 when a validation fails (not an OT-graph,
inconsistent triples, ...) and 2 on unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from .closure import AXIOMS_45D, RuleSet, Status, close, emit_proof, triples_from_text, Engine
from .constructions import construct, e123
from .database import BatchReport, DatabaseSpec, load_records, run_batch, stats
from .errors import FormatError, NotFound, OTGraphError
from .geometry import PointSet, format_points, order_type_of, parse_points
from .graph import (AnnotatedGraph, Graph, annotate, certifies_order_type, exit_edges, format_annotated,
                    is_minimal, is_ot_graph, parse_annotated, seed_triples)
from .render import render_svg
from .search import SearchConfig, exhaustive_minimum, multi_run

log = logging.getLogger("otgraphs")


class ValidationFailure(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _points(path: str) -> PointSet:
    return parse_points(_read(path))


def _graph_and_points(args) -> tuple[AnnotatedGraph, PointSet]:
    ag = parse_annotated(_read(args.graph))
    pts = _points(args.points) if getattr(args, "points", None) else ag.points
    if pts is None:
        raise FormatError("coordinates are needed: pass a points file or embed them in the graph file")
    if len(pts) != ag.n:
        raise FormatError(f"graph has {ag.n} points, coordinate file has {len(pts)}")
    ref = annotate(ag.graph, pts)
    for e, part in ag.partitions.items():
        if ref.partitions[e] != part:
            raise ValidationFailure(f"partition of edge {e} disagrees with the coordinates")
    return ref, pts


def _rules(args) -> RuleSet:
    return RuleSet.parse(args.rules)


def cmd_closure(args) -> None:
    store, bad = triples_from_text(_read(args.triples), args.n)
    if bad:
        raise ValidationFailure(f"input contradicts itself at {bad[0][:3]}")
    closed, trace, status = close(store, _rules(args), trace=args.proof)
    lines = [f"# status {status.value}, known {closed.known_count}/{closed.size}\n"]
    for key, o in closed.known():
        lines.append(f"{key.i} {key.j} {key.k} {'+' if o > 0 else '-'}\n")
    if args.proof and trace is not None:
        lines += ["# proof\n"] + ["# " + ln + "\n" for ln in emit_proof(trace, store).splitlines()]
    _write(args, "".join(lines))
    if status is Status.INCONSISTENT:
        raise ValidationFailure("closure derived a contradiction")


def cmd_check(args) -> None:
    ag, pts = _graph_and_points(args)
    ot = order_type_of(pts)
    rules = _rules(args)
    ok = is_ot_graph(ag.graph, ot, rules)
    lines = [f"edges {ag.graph.m}", f"rules {rules.label()}", f"ot-graph {'yes' if ok else 'no'}"]
    if ok:
        lines.append(f"minimal {'yes' if is_minimal(ag.graph, ot, rules) else 'no'}")
    certified, _ = certifies_order_type(ag, rules)
    lines.append(f"partitions alone decide every triple {'yes' if certified else 'no'}")
    _write(args, "\n".join(lines) + "\n")
    if not ok:
        raise ValidationFailure("not an OT-graph")


def _emit_graph(args, g: Graph, pts: PointSet, header: list[str]) -> None:
    text = "".join(f"# {h}\n" for h in header) + format_annotated(annotate(g, pts))
    _write(args, text)


def cmd_search(args) -> None:
    pts = _points(args.points)
    cfg = SearchConfig(_rules(args), args.seed, args.greedy_iters, args.random_iters, args.exhaustive_max)
    res = multi_run(order_type_of(pts), cfg)
    _emit_graph(args, res.graph, pts, [
        f"size {res.size}", f"strategy {res.strategy.value}", f"seed {res.seed_used}",
        f"minimal {res.is_minimal}", f"proven minimum {res.is_proven_minimum}", f"rules {cfg.rules.label()}"])


def cmd_exhaust(args) -> None:
    pts = _points(args.points)
    try:
        res = exhaustive_minimum(order_type_of(pts), _rules(args), args.max)
    except NotFound as exc:
        raise ValidationFailure(str(exc)) from None
    _emit_graph(args, res.graph, pts, [f"size {res.size}", "proven minimum True", f"rules {_rules(args).label()}"])


def cmd_exitgraph(args) -> None:
    pts = _points(args.points)
    wit = exit_edges(pts)
    g = Graph(len(pts), wit)
    header = [f"exit edges {g.m}"]
    if args.witnesses:
        header += [f"witnesses {a} {b}: {' '.join(map(str, w))}" for (a, b), w in sorted(wit.items())]
    _emit_graph(args, g, pts, header)


def cmd_construct(args) -> None:
    rules = RuleSet.parse(args.rules) if args.rules else None
    g, inst, rules = construct(args.kind, args.n, rules)
    ok = is_ot_graph(g, inst.order_type(), rules)
    header = [f"construction {args.kind} n={args.n}", f"edges {g.m}", f"rules {rules.label()}",
              f"verified ot-graph {'yes' if ok else 'no'}"]
    if args.kind == "two-clique":
        header.append(f"e123 {e123(args.n)}")
    elif args.kind == "small-convex":
        header.append(f"floor(2n/3) {2 * args.n // 3}")
    _emit_graph(args, g, inst.points, header)
    if not ok:
        raise ValidationFailure("construction did not verify")


def cmd_render(args) -> None:
    ag = parse_annotated(_read(args.graph))
    pts = _points(args.points) if args.points else ag.points
    if pts is None:
        raise FormatError("coordinates are needed to render")
    lines = []
    for spec in args.lines or []:
        for tok in spec.split(","):
            a, b = tok.split("-")
            lines.append((int(a), int(b)))
    _write(args, render_svg(ag.graph, pts, lines, args.hourglasses))


def cmd_batch(args) -> None:
    spec = DatabaseSpec(args.n, args.coord_bytes, None if args.no_count_check else -1)
    records = load_records(args.db, spec)
    if args.limit is not None:
        records = records[args.start:args.start + args.limit]
    cfg = SearchConfig(_rules(args), args.seed, args.greedy_iters, args.random_iters, args.exhaustive_max)
    report = run_batch(records, cfg, jobs=args.jobs)
    if args.start:
        for r in report.rows:
            r.index += args.start
    _write(args, report.to_text())
    if report.failures:
        raise ValidationFailure(f"{len(report.failures)} records failed")


def cmd_stats(args) -> None:
    _write(args, stats(BatchReport.from_text(_read(args.report))))


def cmd_prove(args) -> None:
    ag, pts = _graph_and_points(args)
    ot = order_type_of(pts)
    rules = _rules(args)
    seed = seed_triples(ag.graph, ot)
    eng = Engine(ot.n, rules, trace=True)
    eng.load(seed)
    eng.run()
    text = emit_proof(eng.proof(), seed)
    _write(args, text)
    if eng.status() is not Status.COMPLETE:
        raise ValidationFailure(f"closure is {eng.status().value}: not an OT-graph")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="otgraphs", description="Order-type graphs from CC-system axioms.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, rules=True, out=True):
        if rules:
            p.add_argument("--rules", default="45d", help="45d (default), 45 or none (structural axioms only)")
        if out:
            p.add_argument("--out", help="write to this file instead of standard output")

    def search_opts(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--greedy-iters", type=int, default=100)
        p.add_argument("--random-iters", type=int, default=100)
        p.add_argument("--exhaustive-max", type=int, default=None)

    p = sub.add_parser("closure", help="close a set of oriented triples")
    p.add_argument("triples")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--proof", action="store_true")
    common(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("check", help="decide whether a graph is an OT-graph")
    p.add_argument("graph")
    p.add_argument("points", nargs="?")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="search for a small OT-graph")
    p.add_argument("points")
    search_opts(p)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("exhaust", help="minimum OT-graph by exhaustive enumeration")
    p.add_argument("points")
    p.add_argument("--max", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_exhaust)

    p = sub.add_parser("exitgraph", help="exit graph of a point set")
    p.add_argument("points")
    p.add_argument("--witnesses", action="store_true")
    common(p, rules=False)
    p.set_defaults(func=cmd_exitgraph)

    p = sub.add_parser("construct", help="explicit constructions on convex position")
    p.add_argument("--kind", required=True, choices=["hull", "small-convex", "two-clique"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rules", default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("render", help="draw a graph as SVG")
    p.add_argument("graph")
    p.add_argument("points", nargs="?")
    p.add_argument("--lines", action="append", help="edges to extend as dashed lines, e.g. 0-1,2-5")
    p.add_argument("--hourglasses", action="store_true")
    common(p, rules=False)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("batch", help="run the search over a database file")
    p.add_argument("db")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coord-bytes", type=int, default=0, help="1 or 2 (default: 2 for n=9, else 1)")
    p.add_argument("--no-count-check", action="store_true")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    search_opts(p)
    common(p)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("stats", help="summarize a batch report")
    p.add_argument("report")
    common(p, rules=False)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("prove", help="human-readable proof of an OT-graph")
    p.add_argument("graph")
    p.add_argument("points", nargs="?")
    common(p)
    p.set_defaults(func=cmd_prove)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        args.func(args)
    except ValidationFailure as exc:
        print(f"otgraphs: {exc}", file=sys.stderr)
        return 1
    except (OSError, FormatError, OTGraphError, ValueError) as exc:
        print(f"otgraphs: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
