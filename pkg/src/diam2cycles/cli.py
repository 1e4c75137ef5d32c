"""Command line: ``diam2cycles {verify,extract,scan-eg,gen}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from . import extractor
from .fixtures import FIXTURE_NAMES, fixture
from .generators import FILTERS, GenerationError, GenSpec, ProgressError, enumerate_labeled_graph6, generate
from .graph import GraphInputError, iter_edge_lists, precondition_report
from .graph6 import Graph6ParseError, UnsupportedSizeError, encode_graph6, parse_graph6
from .harness import ORACLE_AUTO_LIMIT, Options, StrictAbort, edge_list_records, graph6_lines, run
from .oracle import find_cycle_of_length, verify_witness


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit status 2 is reserved for counterexamples
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_source_flags(p: argparse.ArgumentParser, with_files: bool = True) -> None:
    if with_files:
        p.add_argument("inputs", nargs="*", help="input files (default: standard input)")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6", dest="in_format")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--exhaustive", action="store_true", help="all labelled graphs on --n (..--n-max) vertices")
    src.add_argument("--random", action="store_true", help="seeded G(n, p) samples")
    src.add_argument("--fixture", choices=FIXTURE_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--p", action="append", help="edge probability; repeat to draw from several")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--filter", choices=FILTERS, default="none")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", choices=("json", "tsv"), default="json")
    p.add_argument("--strict", action="store_true", help="abort on the first malformed input record")
    p.add_argument("--oracle", choices=("on", "off", "auto"), default="auto")
    p.add_argument("--timings", action="store_true", help="fill elapsed_micros and wall_time (makes reports nondeterministic)")
    p.add_argument("--budget", type=int, help="node-expansion cap for oracle searches")
    p.add_argument("--chunk-size", type=int, default=512)
    p.add_argument("-o", "--output", help="write the report here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diam2cycles", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="extract and validate a C4/C8 witness for every input graph")
    _add_source_flags(p)
    _add_run_flags(p)

    p = sub.add_parser("scan-eg", help="smallest power-of-two cycle in every min-degree-3 input graph")
    _add_source_flags(p)
    _add_run_flags(p)
    p.add_argument("--max-exp", type=int, default=3)

    p = sub.add_parser("extract", help="run the extractor on one graph and print the trace")
    p.add_argument("input", nargs="?", help="file holding one graph (default: standard input)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6", dest="in_format")
    p.add_argument("--fixture", choices=FIXTURE_NAMES)
    p.add_argument("--graph6", help="graph given inline as a graph6 string")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check", action="store_true", help="cross-check the witness with the brute-force oracle")

    p = sub.add_parser("gen", help="write generated graphs as graph6 lines")
    _add_source_flags(p, with_files=False)
    return parser


# ---------------------------------------------------------------- sources


def _gen_spec(args) -> GenSpec:
    if args.fixture:
        return GenSpec("fixture", n=0, name=args.fixture)
    if args.n is None:
        raise UsageError("--n is required with --exhaustive/--random")
    mode = "exhaustive" if args.exhaustive else "random"
    probs = tuple(args.p) if args.p else ("1/2",)
    return GenSpec(mode, n=args.n, edge_probability=probs, seed=args.seed, count=args.count,
                   filter=args.filter, n_max=args.n_max)


def _generated(args) -> tuple[Iterator[bytes], int | None]:
    spec = _gen_spec(args)
    try:
        spec.validate()
        if spec.mode == "exhaustive":
            hi = spec.n if spec.n_max is None else spec.n_max
            if hi < spec.n:
                raise GenerationError(f"bad vertex range {spec.n}..{hi}")
            for n in range(spec.n, hi + 1):
                GenSpec("exhaustive", n=n).validate()
            records = [r for n in range(spec.n, hi + 1) for r in enumerate_labeled_graph6(n, spec.filter)]
            return iter(records), len(records)
    except GenerationError as exc:
        raise UsageError(str(exc)) from None
    total = spec.count if spec.mode == "random" else 1
    return (encode_graph6(g) for g in generate(spec)), total


def _file_records(args) -> tuple[Iterator, int | None]:
    if args.in_format == "edgelist":
        texts = [open(f).read() for f in args.inputs] if args.inputs else [sys.stdin.read()]
        records = [r for t in texts for r in edge_list_records(t)]
        return iter(records), len(records)
    if args.inputs:
        total = 0
        for f in args.inputs:
            with open(f, "rb") as fh:
                total += sum(1 for _ in graph6_lines(fh))

        def stream():
            for f in args.inputs:
                with open(f, "rb") as fh:
                    yield from graph6_lines(fh)

        return stream(), total
    records = list(graph6_lines(sys.stdin.buffer))
    return iter(records), len(records)


def _sources(args):
    generated = args.exhaustive or args.random or args.fixture
    if generated and getattr(args, "inputs", None):
        raise UsageError("give either input files or a generator flag, not both")
    return _generated(args) if generated else _file_records(args)


# ---------------------------------------------------------------- commands


def _batch(args, kind: str) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    items, total = _sources(args)
    if args.oracle == "auto":
        oracle = total is not None and total <= ORACLE_AUTO_LIMIT
    else:
        oracle = args.oracle == "on"
    opts = Options(oracle=oracle, timings=args.timings, max_exp=getattr(args, "max_exp", 3), budget=args.budget)
    if kind == "scan-eg" and opts.max_exp < 2:
        raise UsageError("--max-exp must be at least 2")
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        summary = run(kind, items, out, opts=opts, jobs=args.jobs, report=args.report,
                      strict=args.strict, chunk_size=args.chunk_size)
    except StrictAbort as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if out is not sys.stdout:
            out.close()
    if summary.counterexample_count:
        print(f"COUNTEREXAMPLE: {summary.counterexample_count} graph(s) without C4 or C8", file=sys.stderr)
    return summary.exit_code


def cmd_verify(args) -> int:
    return _batch(args, "verify")


def cmd_scan_eg(args) -> int:
    return _batch(args, "scan-eg")


def _single_graph(args):
    if args.fixture:
        return fixture(args.fixture)
    if args.graph6:
        return parse_graph6(args.graph6.encode())
    data = open(args.input, "rb").read() if args.input else sys.stdin.buffer.read()
    if args.in_format == "edgelist":
        graphs = list(iter_edge_lists(data.decode()))
    else:
        graphs = [parse_graph6(line) for line in graph6_lines(data.splitlines())]
    if len(graphs) != 1:
        raise UsageError(f"extract needs exactly one graph, got {len(graphs)}")
    return graphs[0]


def cmd_extract(args) -> int:
    g = _single_graph(args)
    report = precondition_report(g)
    if not report.satisfied:
        print("error: hypotheses not met: " + "; ".join(report.violations), file=sys.stderr)
        return 1
    try:
        res = extractor.extract_with_fallback(g, report)
    except extractor.CounterexampleError as exc:
        print(f"COUNTEREXAMPLE: {exc}", file=sys.stderr)
        return 2
    out = {
        "graph_id": encode_graph6(g).decode(),
        "precondition": report.to_dict(),
        "witness": list(res.witness.vertices),
        "length": res.witness.length,
        **res.trace.to_dict(),
    }
    if args.check:
        found = find_cycle_of_length(g, res.witness.length)
        out["oracle_agrees"] = verify_witness(g, res.witness) and found is not None
        out["oracle_witness"] = list(found.vertices) if found else None
    if args.json:
        print(json.dumps(out))
    else:
        print(f"C{res.witness.length}: {' -> '.join(map(str, res.witness.vertices))}")
        print(f"branch: {res.branch}" + (" (mirrored)" if res.trace.mirrored else ""))
        if res.trace.edge:
            print(f"starting edge: {res.trace.edge[0]}-{res.trace.edge[1]}")
        for name, v in out["roles"].items():
            print(f"  {name:>3} = {v}")
        if res.trace.base_c6:
            print(f"base C6: {' -> '.join(map(str, res.trace.base_c6))}")
        if args.check:
            print(f"oracle agrees: {out['oracle_agrees']}")
    return 0 if not args.check or out["oracle_agrees"] else 2


def cmd_gen(args) -> int:
    if not (args.exhaustive or args.random or args.fixture):
        raise UsageError("gen needs one of --exhaustive, --random, --fixture")
    items, _ = _generated(args)
    out = sys.stdout.buffer
    for rec in items:
        out.write(rec + b"\n")
    out.flush()
    return 0


COMMANDS = {"verify": cmd_verify, "extract": cmd_extract, "scan-eg": cmd_scan_eg, "gen": cmd_gen}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GenerationError, ProgressError, GraphInputError, Graph6ParseError,
            UnsupportedSizeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
