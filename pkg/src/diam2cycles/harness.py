"""Batch verification pipeline: graph sources in, ordered report lines out.

Work is split into chunks of raw graph6 records. With ``jobs > 1`` chunks
go to a process pool through a bounded window of futures that is drained
in submission order, so output order (and bytes) do not depend on the
number of workers.
"""

from __future__ import annotations

import json
import time
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable, Iterator, TextIO

from . import extractor
from .graph import GraphInputError, iter_edge_lists, precondition_report
from .graph6 import Graph6ParseError, UnsupportedSizeError, encode_graph6, parse_graph6
from .oracle import SearchBudgetExceeded, find_cycle_of_length, smallest_power_of_two_cycle, verify_witness

ORACLE_AUTO_LIMIT = 10**5
SKIPPED = "skipped"

TSV_VERIFY_COLUMNS = (
    "graph_index", "graph_id", "n", "m", "diameter", "min_degree", "satisfied",
    "status", "branch", "witness", "oracle_agrees", "elapsed_micros",
)
TSV_SCAN_COLUMNS = (
    "graph_index", "graph_id", "n", "m", "min_degree", "status", "exponent",
    "cycle_length", "witness", "cap_exponent", "elapsed_micros",
)


@dataclass(frozen=True)
class BadInput:
    """A source record that could not be decoded; becomes a parse-error record."""

    text: str
    message: str


@dataclass(frozen=True)
class Options:
    oracle: bool = False
    timings: bool = False
    max_exp: int = 3
    budget: int | None = None


# ---------------------------------------------------------------- per-graph work


def _decode(raw):
    if isinstance(raw, BadInput):
        return None, raw.text, raw.message
    gid = raw.rstrip(b"\n").decode("latin-1")
    try:
        return parse_graph6(raw), gid, None
    except (Graph6ParseError, UnsupportedSizeError) as exc:
        return None, gid, str(exc)


def verify_record(index: int, raw, opts: Options) -> dict:
    g, gid, err = _decode(raw)
    if g is None:
        return {"graph_index": index, "graph_id": gid, "status": "parse-error", "error": err}
    t0 = time.perf_counter_ns()
    rec: dict = {"graph_index": index, "graph_id": gid, "n": g.n, "m": g.m}
    report = precondition_report(g)
    rec["precondition"] = report.to_dict()
    if not report.satisfied:
        rec.update(status=SKIPPED, branch=SKIPPED, witness=None, trace=None, oracle_agrees=None)
    else:
        try:
            res = extractor.extract_with_fallback(g, report)
        except extractor.CounterexampleError as exc:
            rec.update(status="counterexample", branch=None, witness=None, trace=None,
                       oracle_agrees=None, error=str(exc))
        else:
            w = res.witness
            ok = verify_witness(g, w) and w.length in (4, 8)
            rec.update(
                status="verified" if ok else "invalid-witness",
                branch=res.branch,
                witness=list(w.vertices),
                trace=res.trace.to_dict(),
                oracle_agrees=_oracle_agrees(g, w, opts) if opts.oracle else None,
            )
    rec["elapsed_micros"] = (time.perf_counter_ns() - t0) // 1000 if opts.timings else None
    return rec


def _oracle_agrees(g, w, opts: Options) -> bool | None:
    # independent confirmation: the oracle's own search finds a cycle of the witness length
    try:
        return verify_witness(g, w) and find_cycle_of_length(g, w.length, budget=opts.budget) is not None
    except SearchBudgetExceeded:
        return None


def scan_record(index: int, raw, opts: Options) -> dict:
    g, gid, err = _decode(raw)
    if g is None:
        return {"graph_index": index, "graph_id": gid, "status": "parse-error", "error": err}
    t0 = time.perf_counter_ns()
    delta = min(g.degrees()) if g.n else 0
    rec: dict = {"graph_index": index, "graph_id": gid, "n": g.n, "m": g.m, "min_degree": delta}
    empty = dict(exponent=None, cycle_length=None, witness=None, cap_exponent=opts.max_exp)
    if delta < 3:
        rec.update(status=SKIPPED, **empty)
    else:
        try:
            found = smallest_power_of_two_cycle(g, opts.max_exp, budget=opts.budget)
        except SearchBudgetExceeded:
            rec.update(status="budget-exhausted", **empty)
        else:
            if found is None:
                rec.update(status="flagged", **empty)
            else:
                e, w = found
                if not verify_witness(g, w):
                    raise AssertionError(f"oracle produced an invalid witness for {gid}")
                rec.update(status="found", exponent=e, cycle_length=w.length,
                           witness=list(w.vertices), cap_exponent=opts.max_exp)
    rec["elapsed_micros"] = (time.perf_counter_ns() - t0) // 1000 if opts.timings else None
    return rec


def _run_chunk(task) -> list[dict]:
    kind, opts, start, items = task
    fn = verify_record if kind == "verify" else scan_record
    return [fn(start + i, raw, opts) for i, raw in enumerate(items)]


# ---------------------------------------------------------------- ordered pool


def _chunks(items: Iterable, size: int) -> Iterator[tuple[int, list]]:
    it = iter(items)
    start = 0
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield start, block
        start += len(block)


def process_stream(kind: str, items: Iterable, opts: Options, jobs: int = 1,
                   chunk_size: int = 512) -> Iterator[dict]:
    """Yield one record per input item, in input order, for any ``jobs``."""
    tasks = ((kind, opts, start, block) for start, block in _chunks(items, chunk_size))
    if jobs <= 1:
        for task in tasks:
            yield from _run_chunk(task)
        return
    window = jobs * 4
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending: deque = deque()
        for task in tasks:
            pending.append(pool.submit(_run_chunk, task))
            if len(pending) >= window:
                yield from pending.popleft().result()
        while pending:
            yield from pending.popleft().result()


# ---------------------------------------------------------------- sources


def graph6_lines(stream: Iterable[bytes]) -> Iterator[bytes]:
    """graph6 records from a byte-line stream, skipping blanks and a leading header line."""
    first = True
    for line in stream:
        if first and line.strip() == b">>graph6<<":
            first = False
            continue
        first = False
        if line.strip():
            yield line.rstrip(b"\r\n")


def edge_list_records(text: str) -> Iterator:
    try:
        for g in iter_edge_lists(text):
            yield encode_graph6(g)
    except (GraphInputError, UnsupportedSizeError) as exc:
        yield BadInput("<edgelist>", str(exc))


# ---------------------------------------------------------------- summary + report writing


@dataclass
class RunSummary:
    kind: str
    records: int = 0
    statuses: Counter = field(default_factory=Counter)
    branches: Counter = field(default_factory=Counter)
    exponents: Counter = field(default_factory=Counter)
    wall_time: float | None = None

    def add(self, rec: dict) -> None:
        self.records += 1
        self.statuses[rec["status"]] += 1
        if self.kind == "verify" and rec.get("branch"):
            self.branches[rec["branch"]] += 1
        if self.kind == "scan-eg" and rec.get("exponent") is not None:
            self.exponents[str(rec["exponent"])] += 1

    @property
    def counterexample_count(self) -> int:
        return self.statuses["counterexample"]

    @property
    def extracted(self) -> int:
        return sum(v for k, v in self.branches.items() if k != SKIPPED)

    @property
    def fallback_rate(self) -> float:
        total = self.extracted
        return self.branches[extractor.FALLBACK] / total if total else 0.0

    @property
    def exit_code(self) -> int:
        if self.counterexample_count or self.statuses["invalid-witness"]:
            return 2
        return 0

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "records": self.records,
            "statuses": dict(sorted(self.statuses.items())),
        }
        if self.kind == "verify":
            out["branches"] = dict(sorted(self.branches.items()))
            out["counterexample_count"] = self.counterexample_count
            out["fallback_rate"] = self.fallback_rate
        else:
            out["exponents"] = dict(sorted(self.exponents.items()))
            out["flagged_count"] = self.statuses["flagged"]
        out["wall_time"] = self.wall_time
        return out


def _tsv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ",".join(map(str, v))
    return str(v)


def format_record(rec: dict, report: str, kind: str) -> str:
    if report == "json":
        return json.dumps(rec, separators=(",", ":"))
    flat = dict(rec)
    pre = flat.pop("precondition", None) or {}
    flat.update(pre)
    if "error" in rec:
        flat["status"] = f"{rec['status']}: {rec['error']}"
    cols = TSV_VERIFY_COLUMNS if kind == "verify" else TSV_SCAN_COLUMNS
    return "\t".join(_tsv_cell(flat.get(c)) for c in cols)


class StrictAbort(Exception):
    def __init__(self, rec: dict):
        super().__init__(f"record {rec['graph_index']}: {rec.get('error')}")
        self.record = rec


def run(kind: str, items: Iterable, out: TextIO, *, opts: Options, jobs: int = 1,
        report: str = "json", strict: bool = False, chunk_size: int = 512,
        on_record: Callable[[dict], None] | None = None) -> RunSummary:
    """Process ``items`` and write report lines plus a trailing summary to ``out``."""
    t0 = time.perf_counter()
    summary = RunSummary(kind)
    if report == "tsv":
        out.write("\t".join(TSV_VERIFY_COLUMNS if kind == "verify" else TSV_SCAN_COLUMNS) + "\n")
    for rec in process_stream(kind, items, opts, jobs=jobs, chunk_size=chunk_size):
        if strict and rec["status"] == "parse-error":
            raise StrictAbort(rec)
        summary.add(rec)
        if on_record is not None:
            on_record(rec)
        out.write(format_record(rec, report, kind) + "\n")
    if opts.timings:
        summary.wall_time = round(time.perf_counter() - t0, 6)
    tail = summary.to_dict()
    if report == "json":
        out.write(json.dumps({"summary": tail}, separators=(",", ":")) + "\n")
    else:
        out.write("# summary " + json.dumps(tail, separators=(",", ":")) + "\n")
    return summary
