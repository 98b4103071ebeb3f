"""Command-line front end: analyze, gen-er, synth, motifs.

Exit codes: 0 success, 1 I/O or parse failure, 2 usage error, 3 synthesis
infeasible within its bound.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .graph import DirectedGraph, GraphError, ParseError, TooManyEdges, generate_er, parse_graph, serialize_graph
from .report import analyze_graph, canonical_json, rational, report_to_csv
from .synthesis import Infeasible, InvalidTarget, SynthesisTarget, measure_signature, synthesize

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_graph(path: str) -> DirectedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _default_threads() -> int:
    return os.cpu_count() or 1


def cmd_analyze(args) -> int:
    g = _read_graph(args.input)
    report = analyze_graph(
        g,
        max_dim=args.max_dim,
        baseline=args.baseline,
        motifs=args.motifs,
        strict=args.strict,
        seed=args.seed,
        threads=args.threads,
        input_path=args.input,
        timings=args.timings,
    )
    if args.csv:
        _write(args.out, report_to_csv(report))
    else:
        _write(args.out, canonical_json(report) + "\n")
    return EXIT_OK


def cmd_gen_er(args) -> int:
    g = generate_er(args.n, args.m, args.seed)
    _write(args.out, serialize_graph(g))
    return EXIT_OK


def cmd_synth(args) -> int:
    target = SynthesisTarget.parse(args.target)
    g = synthesize(target, bound=args.bound, threads=args.threads)
    _write(args.out, serialize_graph(g))
    measured = measure_signature(g, target.dimension, threads=args.threads)
    verification = {
        "schema": "simplicia/1",
        "target": [rational(v) for v in target.values],
        "measured": [rational(v) for v in measured],
        "match": list(measured) == list(target.values),
        "vertices": g.n,
        "edges": g.edge_count,
        "output": args.out,
    }
    sys.stdout.write(canonical_json(verification) + "\n")
    return EXIT_OK


def cmd_motifs(args) -> int:
    g = _read_graph(args.input)
    report = analyze_graph(
        g,
        motifs=True,
        strict=args.strict,
        threads=args.threads,
        input_path=args.input,
    )
    block = {
        "schema": "simplicia/1",
        "tool": {"name": "simplicia", "version": __version__},
        "input": report["input"],
        "motifs": report["motifs"],
    }
    _write(args.out, canonical_json(block) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplicia",
        description="Directed-graph census of simplices and almost-simplices.",
    )
    parser.add_argument("--version", action="version", version=f"simplicia {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="census a graph file and report p / closing contributions")
    p.add_argument("input")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--baseline", type=int, default=0, metavar="R", help="matched random replicates")
    p.add_argument("--motifs", action="store_true")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--out", default=None)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen-er", help="write a seeded random digraph with exact edge count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen_er)

    p = sub.add_parser("synth", help="construct a graph with a prescribed p signature")
    p.add_argument("--target", required=True, help='comma-separated rationals, e.g. "1/3,1/5"')
    p.add_argument("--out", default=None)
    p.add_argument("--bound", type=int, default=64)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("motifs", help="census the three almost-2-simplex motif shapes")
    p.add_argument("input")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_motifs)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidTarget, TooManyEdges) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Infeasible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
