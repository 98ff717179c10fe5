"""Command-line front door.

Subcommands: play, explore, dfa, rootsum, classify, tableaux, serve.  All
JSON output is deterministic (sorted keys, stable ordering) so invocations
can be golden-tested.  Exit codes: 0 success, 2 usage error, 1 domain error
such as a diverged game.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from kostant.automaton import build_dfa, export_dot, to_json as dfa_to_json
from kostant.classify import SimpleGraph, classify_report
from kostant.diagrams import DynkinDiagram, IllegalRank, build_diagram
from kostant.game import (
    Diverged,
    GameBoard,
    LimitExceeded,
    classic_start,
    explore,
    first_sad_strategy,
    random_strategy,
    run,
    status,
)
from kostant.rootcount import rootsum_report
from kostant.tableaux import enumerate_tableaux

USAGE_ERROR = 2
DOMAIN_ERROR = 1


def emit_report(result: dict, fmt: str = "json") -> str:
    """Deterministic serialization; byte-identical across repeat runs."""
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_vertices(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    return frozenset(int(tok) for tok in text.split(",") if tok)


def _diagram_from_args(args: argparse.Namespace) -> DynkinDiagram:
    return build_diagram(args.type, args.rank)


def _add_diagram_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, choices=list("ABCDEFG"), help="family label")
    p.add_argument("--rank", required=True, type=int)


def _cmd_play(args: argparse.Namespace, out) -> int:
    d = _diagram_from_args(args)
    sources = _parse_vertices(args.sources)
    if sources:
        board = GameBoard.from_diagram(d, sources, mode="modified")
        start = board.zero_configuration()
    else:
        if args.start is None:
            print(
                "error: classic play needs --start; modified play needs --sources",
                file=sys.stderr,
            )
            return USAGE_ERROR
        board = GameBoard.from_diagram(d)
        start = classic_start(board, args.start)
    if args.strategy == "first-sad":
        strategy = first_sad_strategy
    else:
        if args.seed is None:
            print("error: --strategy random requires --seed", file=sys.stderr)
            return USAGE_ERROR
        strategy = random_strategy(args.seed)
    result = run(board, start, strategy)
    if isinstance(result, Diverged):
        payload = result.trace.to_json()
        payload["diverged"] = result.bound
        print(emit_report(payload), file=out)
        return DOMAIN_ERROR
    payload = result.to_json()
    payload["board"] = {"family": d.family, "rank": d.rank, "sources": sorted(sources)}
    payload["final"] = list(result.final)
    print(emit_report(payload), file=out)
    return 0


def _cmd_explore(args: argparse.Namespace, out) -> int:
    d = _diagram_from_args(args)
    sources = _parse_vertices(args.sources)
    if sources:
        board = GameBoard.from_diagram(d, sources, mode="modified")
        start = board.zero_configuration()
    else:
        if args.start is None:
            print("error: classic explore needs --start", file=sys.stderr)
            return USAGE_ERROR
        board = GameBoard.from_diagram(d)
        start = classic_start(board, args.start)
    try:
        graph = explore(board, start, max_states=args.max_states)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    if args.emit == "dot":
        print(graph.to_dot(), file=out)
        return 0
    payload = {
        "schema": "kostant/v1",
        "board": {"family": d.family, "rank": d.rank, "sources": sorted(sources)},
        "start": list(start),
        "states": sorted(list(c) for c in graph.nodes),
        "edges": sorted([list(src), v, list(dst)] for src, v, dst in graph.edges),
        "sinks": sorted(list(c) for c in graph.sinks),
    }
    print(emit_report(payload), file=out)
    return 0


def _cmd_dfa(args: argparse.Namespace, out) -> int:
    d = _diagram_from_args(args)
    j_set = _parse_vertices(args.J)
    dfa = build_dfa(d, j_set)
    if args.emit == "dot":
        print(export_dot(dfa), file=out)
    else:
        print(emit_report(dfa_to_json(dfa)), file=out)
    return 0


def _cmd_rootsum(args: argparse.Namespace, out) -> int:
    d = _diagram_from_args(args)
    print(emit_report(rootsum_report(d)), file=out)
    return 0


def _cmd_classify(args: argparse.Namespace, out) -> int:
    with open(args.graph, "r", encoding="utf-8") as fh:
        g = SimpleGraph.from_json(json.load(fh))
    print(emit_report(classify_report(g)), file=out)
    return 0


def _cmd_tableaux(args: argparse.Namespace, out) -> int:
    tableaux = sorted(enumerate_tableaux(args.n, args.k), key=lambda t: t.rows)
    if args.emit == "ascii":
        for t in tableaux:
            print(t.ascii(), file=out)
            print(file=out)
        return 0
    payload = {
        "schema": "kostant/v1",
        "n": args.n,
        "k": args.k,
        "count": len(tableaux),
        "tableaux": [t.to_json() for t in tableaux],
    }
    print(emit_report(payload), file=out)
    return 0


def _cmd_serve(args: argparse.Namespace, out) -> int:
    import uvicorn

    from kostant.service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kostant", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("play", help="play one game to termination")
    _add_diagram_args(p)
    p.add_argument("--sources", help="comma-separated source vertices (modified game)")
    p.add_argument("--start", type=int, help="start chip vertex (classic game)")
    p.add_argument("--strategy", choices=["first-sad", "random"], default="first-sad")
    p.add_argument("--seed", type=int, help="seed for the random strategy")
    p.set_defaults(func=_cmd_play)

    p = sub.add_parser("explore", help="breadth-first walk of all reachable configurations")
    _add_diagram_args(p)
    p.add_argument("--sources", help="comma-separated source vertices")
    p.add_argument("--start", type=int, help="start chip vertex (classic game)")
    p.add_argument("--max-states", type=int, default=10**6)
    p.add_argument("--emit", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("dfa", help="automaton for the reduced coset-word language")
    _add_diagram_args(p)
    p.add_argument("--J", help="comma-separated parabolic generator subset")
    p.add_argument("--emit", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_dfa)

    p = sub.add_parser("rootsum", help="positive-root sum from single-source games")
    _add_diagram_args(p)
    p.set_defaults(func=_cmd_rootsum)

    p = sub.add_parser("classify", help="Kostant finiteness of a graph file")
    p.add_argument("--graph", required=True, help="JSON file {vertices, edges}")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tableaux", help="tableaux of all terminal single-source plays")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--emit", choices=["json", "ascii"], default="json")
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.set_defaults(func=_cmd_serve)

    return parser


def run_cli(argv: Sequence[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except (IllegalRank, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
