"""Immutable simple graphs over dense vertex ids, stored as bitset rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``u`` and ``v`` are
adjacent, so adjacency tests are a shift-and-mask and neighborhood
intersections are a single ``&``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphInputError(ValueError):
    """Raised for out-of-range vertices, self-loops and malformed edge lists."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        # Trusted constructor; validation lives in from_edge_list / from_rows.
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_rows", tuple(rows))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from bitset rows, checking symmetry and the absence of loops."""
        n = len(rows)
        limit = 1 << n
        for v, row in enumerate(rows):
            if row < 0 or row >= limit:
                raise GraphInputError(f"row {v} references a vertex outside [0, {n})")
            if row >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")
        return cls(n, rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphInputError(f"vertex {v} outside [0, {self._n})")

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self._rows):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self._n, self._rows)))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self._n, self._rows))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def neighbors(g: Graph, v: int) -> tuple[int, ...]:
    g._check(v)
    return tuple(iter_bits(g.rows[v]))


def common_neighbors(g: Graph, u: int, v: int) -> tuple[int, ...]:
    g._check(u)
    g._check(v)
    if u == v:
        raise GraphInputError("common_neighbors needs two distinct vertices")
    return tuple(iter_bits(g.rows[u] & g.rows[v]))


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop counts from ``source``; ``None`` marks unreachable vertices."""
    g._check(source)
    dist: list[int | None] = [None] * g.n
    rows = g.rows
    seen = frontier = 1 << source
    depth = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            dist[v] = depth
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        depth += 1
    return dist


@dataclass(frozen=True)
class PreconditionReport:
    """Diameter / minimum degree against the hypotheses ``diameter == 2`` and ``min_degree >= 3``.

    ``diameter`` is ``None`` when infinite (disconnected graph, or fewer
    than two vertices).
    """

    diameter: int | None
    min_degree: int
    satisfied: bool

    @property
    def violations(self) -> list[str]:
        out = []
        if self.diameter != 2:
            shown = "infinite" if self.diameter is None else self.diameter
            out.append(f"diameter is {shown}, expected 2")
        if self.min_degree < 3:
            out.append(f"minimum degree is {self.min_degree}, expected at least 3")
        return out

    def to_dict(self) -> dict:
        return {
            "diameter": self.diameter,
            "min_degree": self.min_degree,
            "satisfied": self.satisfied,
        }


def diameter(g: Graph) -> int | None:
    n = g.n
    if n < 2:
        return None
    best = 0
    for s in range(n):
        dist = bfs_distances(g, s)
        if None in dist:
            return None
        best = max(best, max(dist))  # type: ignore[type-var]
    return best


def precondition_report(g: Graph) -> PreconditionReport:
    if g.n == 0:
        return PreconditionReport(diameter=None, min_degree=0, satisfied=False)
    diam = diameter(g)
    delta = min(g.degrees())
    return PreconditionReport(diameter=diam, min_degree=delta, satisfied=diam == 2 and delta >= 3)


def parse_edge_list(text: str) -> Graph:
    """Parse a single graph in ``n m`` / ``u v`` edge-list form."""
    graphs = list(iter_edge_lists(text))
    if len(graphs) != 1:
        raise GraphInputError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def iter_edge_lists(text: str) -> Iterator[Graph]:
    """Parse zero or more concatenated edge-list blocks."""
    tokens = text.split()
    pos = 0

    def take() -> int:
        nonlocal pos
        if pos >= len(tokens):
            raise GraphInputError("edge list ended early")
        tok = tokens[pos]
        pos += 1
        try:
            return int(tok)
        except ValueError:
            raise GraphInputError(f"expected an integer, got {tok!r}") from None

    while pos < len(tokens):
        n, m = take(), take()
        if m < 0:
            raise GraphInputError(f"negative edge count {m}")
        yield Graph.from_edge_list(n, [(take(), take()) for _ in range(m)])


def format_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
