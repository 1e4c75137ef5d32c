"""Brute-force cycle search used as ground truth for the extractor."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits


class SearchBudgetExceeded(RuntimeError):
    """The node-expansion cap was hit before the search finished."""


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def canonical(self) -> "CycleWitness":
        """Rotate the minimum vertex to the front and orient so the second vertex is the smaller neighbor."""
        vs = self.vertices
        if not vs:
            return self
        i = vs.index(min(vs))
        rot = vs[i:] + vs[:i]
        if len(rot) > 2 and rot[-1] < rot[1]:
            rot = rot[:1] + rot[:0:-1]
        return CycleWitness(rot)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def verify_witness(g: Graph, w: CycleWitness | Sequence[int]) -> bool:
    vs = w.vertices if isinstance(w, CycleWitness) else tuple(w)
    k = len(vs)
    if k < 3:
        return False
    try:
        if len(set(vs)) != k:
            return False
        if not all(isinstance(v, int) and 0 <= v < g.n for v in vs):
            return False
    except TypeError:
        return False
    rows = g.rows
    return all(rows[vs[i]] >> vs[(i + 1) % k] & 1 for i in range(k))


def find_cycle_of_length(g: Graph, k: int, budget: int | None = None) -> CycleWitness | None:
    """Lexicographically least canonical ``k``-cycle, or ``None`` if there is none.

    Paths start at the smallest vertex of the cycle and only visit larger
    vertices; the closing vertex must exceed the second vertex, so every
    cycle is met exactly once and in canonical orientation.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    n = g.n
    rows = g.rows
    expansions = 0

    for s in range(n - k + 1):
        above = ((1 << n) - 1) >> (s + 1) << (s + 1)
        # dist_to_s[v]: hops from v back to s inside the allowed vertex set
        dist = _distances_within(rows, s, above | 1 << s)
        if rows[s] & above == 0:
            continue
        path = [s]

        def extend(last: int, used: int) -> bool:
            nonlocal expansions
            depth = len(path)
            remaining = k - depth  # vertices still to place
            if remaining == 0:
                return bool(rows[last] >> s & 1) and path[1] < last
            cand = rows[last] & above & ~used
            for v in iter_bits(cand):
                d = dist.get(v)
                if d is None or d > remaining:
                    continue
                expansions += 1
                if budget is not None and expansions > budget:
                    raise SearchBudgetExceeded(f"expansion cap {budget} reached while searching for C{k}")
                path.append(v)
                if extend(v, used | 1 << v):
                    return True
                path.pop()
            return False

        if extend(s, 1 << s):
            return CycleWitness(tuple(path))
    return None


def _distances_within(rows: Sequence[int], source: int, allowed: int) -> dict[int, int]:
    dist = {source: 0}
    seen = frontier = 1 << source
    depth = 0
    while frontier:
        depth += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = depth
    return dist


def smallest_power_of_two_cycle(g: Graph, max_exp: int, budget: int | None = None) -> tuple[int, CycleWitness] | None:
    if max_exp < 2:
        raise ValueError(f"max_exp must be at least 2, got {max_exp}")
    for e in range(2, max_exp + 1):
        if 1 << e > g.n:
            break
        w = find_cycle_of_length(g, 1 << e, budget=budget)
        if w is not None:
            return e, w
    return None
