"""Constructive C4/C8 extraction for diameter-2 graphs of minimum degree >= 3.

The proof splits on whether the starting edge ``v1 v2`` lies in a triangle.
Every step that the argument dismisses "by contradiction" exhibits a concrete
4-cycle; here those steps return that 4-cycle. The surviving paths build an
8-cycle from named role vertices, recorded in an :class:`ExtractionTrace`.

Free choices scan candidates in ascending vertex order, so results are a
function of the labelled graph alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, GraphInputError, PreconditionReport, iter_bits, lowest_bit, precondition_report
from .oracle import CycleWitness, find_cycle_of_length, verify_witness

CASE1_C4 = "Case1-Contradiction-C4"
CASE1_C8 = "Case1-C8"
CASE2_C4 = "Case2-Contradiction-C4"
CASE2_C8 = "Case2-C8"
FALLBACK = "Fallback-Oracle"
BRANCHES = (CASE1_C4, CASE1_C8, CASE2_C4, CASE2_C8, FALLBACK)

ROLE_NAMES = ("v1", "v2", "a", "b", "c", "d", "v6", "w1", "w2", "w3", "w4", "x", "y")
CASE1_C8_ORDER = ("w4", "w2", "v6", "d", "v2", "v1", "b", "w1")
CASE2_C8_ORDER = ("v1", "a", "x", "c", "v2", "d", "y", "b")


class PreconditionError(ValueError):
    def __init__(self, report: PreconditionReport):
        super().__init__("graph violates the hypotheses: " + "; ".join(report.violations))
        self.report = report


class ProofPathExhausted(RuntimeError):
    """Every deterministic role assignment for the edge was abandoned."""


class CounterexampleError(RuntimeError):
    """Neither a 4-cycle nor an 8-cycle exists in a hypothesis-satisfying graph."""

    def __init__(self, g: Graph):
        super().__init__(f"no C4 or C8 found in a diameter-2, min-degree-3 graph {g!r}")
        self.graph = g


@dataclass(frozen=True)
class ExtractionTrace:
    branch: str
    roles: dict[str, int] = field(default_factory=dict)
    base_c6: tuple[int, ...] | None = None
    # Case 1 only: the 8-cycle closed on the w3 side and roles were relabelled by the b<->d symmetry.
    mirrored: bool = False
    edge: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "branch": self.branch,
            "roles": {k: self.roles[k] for k in ROLE_NAMES if k in self.roles},
            "base_c6": list(self.base_c6) if self.base_c6 is not None else None,
            "mirrored": self.mirrored,
            "edge": list(self.edge) if self.edge is not None else None,
        }


@dataclass(frozen=True)
class ExtractionResult:
    witness: CycleWitness
    trace: ExtractionTrace

    @property
    def branch(self) -> str:
        return self.trace.branch


def least_edge(g: Graph) -> tuple[int, int]:
    return next(g.edges())


def classify_edge(g: Graph, v1: int, v2: int) -> int:
    """1 when ``v1 v2`` has a common neighbor (Case 1), else 2."""
    if not g.adjacent(v1, v2):
        raise GraphInputError(f"({v1}, {v2}) is not an edge")
    return 1 if g.rows[v1] & g.rows[v2] else 2


def _result(g: Graph, cycle: Iterable[int], branch: str, roles: dict[str, int], **kw) -> ExtractionResult:
    w = CycleWitness(tuple(cycle))
    # Every branch constructs its cycle from edges it has checked; a failure here is a bug.
    assert verify_witness(g, w), (branch, w, roles)
    return ExtractionResult(w, ExtractionTrace(branch, dict(roles), **kw))


def _local_c4(g: Graph, verts: Iterable[int]) -> tuple[int, ...] | None:
    """A 4-cycle inside the subgraph induced by ``verts``, for the "else a C4 would form" steps.

    Such a cycle exists iff two vertices of the set share two neighbors in it.
    """
    rows = g.rows
    inside = 0
    for v in verts:
        inside |= 1 << v
    for p in iter_bits(inside):
        for r in iter_bits(inside >> (p + 1) << (p + 1)):
            both = rows[p] & rows[r] & inside
            if both & (both - 1):
                q = lowest_bit(both)
                return (p, q, r, lowest_bit(both & ~(1 << q)))
    return None


def case1_extract(g: Graph, v1: int, v2: int, a: int) -> ExtractionResult:
    """Case 1: ``a`` is a common neighbor of the edge ``v1 v2``.

    Raises :class:`ProofPathExhausted` when every (b, d, v6, w1/w2/w3)
    assignment is abandoned without a witness.
    """
    rows = g.rows
    if not g.adjacent(v1, v2):
        raise GraphInputError(f"({v1}, {v2}) is not an edge")
    if not (rows[v1] >> a & 1 and rows[v2] >> a & 1):
        raise GraphInputError(f"{a} is not a common neighbor of {v1} and {v2}")
    edge = (v1, v2)
    base = {"v1": v1, "v2": v2, "a": a}

    other = (rows[v1] & rows[v2]) & ~(1 << a)
    if other:
        a2 = lowest_bit(other)
        return _result(g, (v1, a, v2, a2), CASE1_C4, base, edge=edge)

    # With a unique common neighbor, B and D are disjoint.
    B = rows[v1] & ~(1 << v2 | 1 << a)
    D = rows[v2] & ~(1 << v1 | 1 << a)
    for b in iter_bits(B):
        for d in iter_bits(D):
            roles = dict(base, b=b, d=d)
            if rows[b] >> d & 1:
                return _result(g, (b, v1, v2, d), CASE1_C4, roles, edge=edge)
            if rows[a] >> b & 1:
                return _result(g, (a, b, v1, v2), CASE1_C4, roles, edge=edge)
            if rows[a] >> d & 1:
                return _result(g, (a, d, v2, v1), CASE1_C4, roles, edge=edge)
            # Neither v1 nor v2 is adjacent to both b and d, and a is adjacent to neither.
            tops = rows[b] & rows[d] & ~(1 << v1 | 1 << v2)
            if not tops:
                continue
            v6 = lowest_bit(tops)
            roles["v6"] = v6
            rest = tops & ~(1 << v6)
            if rest:
                return _result(g, (b, v6, d, lowest_bit(rest)), CASE1_C4, roles, edge=edge)
            found = _case1_from_c6(g, roles, edge)
            if found is not None:
                return found
    raise ProofPathExhausted(f"Case 1 role assignments exhausted for edge {edge}")


def _case1_from_c6(g: Graph, roles: dict[str, int], edge: tuple[int, int]) -> ExtractionResult | None:
    rows = g.rows
    v1, v2, a, b, d, v6 = (roles[k] for k in ("v1", "v2", "a", "b", "d", "v6"))
    c6 = (v1, b, v6, d, v2, a)
    inside = 0
    for v in c6:
        inside |= 1 << v
    W1 = rows[b] & ~inside
    W2 = rows[v6] & ~inside
    W3 = rows[d] & ~inside
    if not (W1 and W2 and W3):
        quad = _local_c4(g, c6)
        if quad is not None:
            return _result(g, quad, CASE1_C4, roles, base_c6=c6, edge=edge)
        return None

    for w2 in iter_bits(W2):
        if rows[w2] >> b & 1 and rows[w2] >> d & 1:
            return _result(g, (b, w2, d, v6), CASE1_C4, dict(roles, w2=w2), base_c6=c6, edge=edge)
        for w1 in iter_bits(W1 & ~(1 << w2)):
            r = dict(roles, w1=w1, w2=w2)
            if rows[w2] >> w1 & 1:
                return _result(g, (w2, w1, b, v6), CASE1_C4, r, base_c6=c6, edge=edge)
            blocked = 1 << w2 | 1 << v6 | 1 << d | 1 << v2 | 1 << v1 | 1 << b | 1 << w1
            closers = rows[w1] & rows[w2] & ~blocked
            if closers:
                r["w4"] = lowest_bit(closers)
                cycle = tuple(r[k] for k in CASE1_C8_ORDER)
                return _result(g, cycle, CASE1_C8, r, base_c6=c6, edge=edge)
        for w3 in iter_bits(W3 & ~(1 << w2)):
            if rows[w2] >> w3 & 1:
                r = dict(roles, w2=w2, w3=w3)
                return _result(g, (w2, w3, d, v6), CASE1_C4, r, base_c6=c6, edge=edge)
            blocked = 1 << w2 | 1 << v6 | 1 << b | 1 << v1 | 1 << v2 | 1 << d | 1 << w3
            closers = rows[w3] & rows[w2] & ~blocked
            if closers:
                # Relabel by the v1<->v2, b<->d symmetry so the cycle reads in the canonical role order.
                r = dict(roles, v1=v2, v2=v1, b=d, d=b, w1=w3, w2=w2, w4=lowest_bit(closers))
                cycle = tuple(r[k] for k in CASE1_C8_ORDER)
                mirrored_c6 = (v2, d, v6, b, v1, a)
                return _result(g, cycle, CASE1_C8, r, base_c6=mirrored_c6, mirrored=True, edge=edge)
    # The w's collide or every w4 candidate lies on the cycle; look for the 4-cycle this should force.
    quad = _local_c4(g, iter_bits(inside | W1 | W2 | W3))
    if quad is not None:
        return _result(g, quad, CASE1_C4, roles, base_c6=c6, edge=edge)
    return None


def case2_extract(g: Graph, v1: int, v2: int) -> ExtractionResult:
    """Case 2: ``v1 v2`` has no common neighbor.

    Takes the two smallest neighbors of each endpoint as ``a, b`` and
    ``c, d``; the four are distinct because the neighborhoods are disjoint.
    """
    rows = g.rows
    if not g.adjacent(v1, v2):
        raise GraphInputError(f"({v1}, {v2}) is not an edge")
    if rows[v1] & rows[v2]:
        raise GraphInputError(f"{v1} and {v2} have a common neighbor; use case1_extract")
    A = list(iter_bits(rows[v1] & ~(1 << v2)))
    C = list(iter_bits(rows[v2] & ~(1 << v1)))
    if len(A) < 2 or len(C) < 2:
        raise GraphInputError(f"edge ({v1}, {v2}) endpoints need two further neighbors each")
    a, b = A[0], A[1]
    c, d = C[0], C[1]
    edge = (v1, v2)
    roles = {"v1": v1, "v2": v2, "a": a, "b": b, "c": c, "d": d}

    if rows[a] >> c & 1:
        return _result(g, (a, c, v2, v1), CASE2_C4, roles, edge=edge)
    if rows[b] >> d & 1:
        return _result(g, (b, d, v2, v1), CASE2_C4, roles, edge=edge)

    # v1, v2 can never be common neighbors of (a, c) or (b, d) here: v1 ~ c would make c a common neighbor of the edge.
    X = rows[a] & rows[c]
    Y = rows[b] & rows[d]
    if X >> b & 1:
        return _result(g, (v1, b, c, v2), CASE2_C4, dict(roles, x=b), edge=edge)
    if X >> d & 1:
        return _result(g, (v2, d, a, v1), CASE2_C4, dict(roles, x=d), edge=edge)
    if Y >> a & 1:
        return _result(g, (v2, d, a, v1), CASE2_C4, dict(roles, y=a), edge=edge)
    if Y >> c & 1:
        return _result(g, (v1, b, c, v2), CASE2_C4, dict(roles, y=c), edge=edge)
    if X & Y:
        z = lowest_bit(X & Y)
        return _result(g, (v1, b, z, a), CASE2_C4, dict(roles, x=z, y=z), edge=edge)
    if not (X and Y):
        raise ProofPathExhausted(f"missing common neighbor for ({a}, {c}) or ({b}, {d}); is the diameter 2?")
    roles["x"] = lowest_bit(X)
    roles["y"] = lowest_bit(Y)
    cycle = tuple(roles[k] for k in CASE2_C8_ORDER)
    return _result(g, cycle, CASE2_C8, roles, edge=edge)


def extract_from_edge(g: Graph, v1: int, v2: int) -> ExtractionResult:
    if classify_edge(g, v1, v2) == 1:
        return case1_extract(g, v1, v2, lowest_bit(g.rows[v1] & g.rows[v2]))
    return case2_extract(g, v1, v2)


def _require(g: Graph, report: PreconditionReport | None) -> None:
    if report is None:
        report = precondition_report(g)
    if not report.satisfied:
        raise PreconditionError(report)


def extract(g: Graph, report: PreconditionReport | None = None) -> ExtractionResult:
    """Run the proof path from the lexicographically least edge."""
    _require(g, report)
    v1, v2 = least_edge(g)
    return extract_from_edge(g, v1, v2)


def extract_with_fallback(g: Graph, report: PreconditionReport | None = None) -> ExtractionResult:
    """Proof path on each edge in lexicographic order, then the brute-force oracle."""
    _require(g, report)
    for v1, v2 in g.edges():
        try:
            return extract_from_edge(g, v1, v2)
        except ProofPathExhausted:
            continue
    for k in (4, 8):
        w = find_cycle_of_length(g, k)
        if w is not None:
            return ExtractionResult(w, ExtractionTrace(FALLBACK))
    raise CounterexampleError(g)
