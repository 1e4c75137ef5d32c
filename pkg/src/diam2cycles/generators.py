"""Deterministic graph sources: exhaustive labelled enumeration and seeded G(n, p).

Random streams use xorshift64* seeded through one splitmix64 step (see
README), so a seed reproduces the same stream in any language.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph, precondition_report

MASK64 = (1 << 64) - 1
MAX_EXHAUSTIVE_N = 8
REJECTION_CAP = 10**6
FILTERS = ("none", "theorem-preconditions", "min-degree-3")


class GenerationError(ValueError):
    pass


class ProgressError(RuntimeError):
    """Too many consecutive rejections; the filter is (nearly) unsatisfiable for these parameters."""


class XorShift64Star:
    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, bound: int) -> int:
        return self.next() % bound


def _as_fraction(p) -> Fraction:
    # floats go through their shortest repr so 0.6 means 3/5, not the binary approximation
    return Fraction(repr(p)) if isinstance(p, float) else Fraction(p)


@dataclass(frozen=True)
class GenSpec:
    mode: str
    n: int
    edge_probability: Fraction | float | str | tuple = Fraction(1, 2)
    seed: int = 0
    count: int = 1
    filter: str = "none"
    n_max: int | None = None  # random mode: draw n uniformly from [n, n_max]
    name: str | None = None  # fixture mode

    def probabilities(self) -> tuple[Fraction, ...]:
        p = self.edge_probability
        ps = tuple(p) if isinstance(p, (tuple, list)) else (p,)
        return tuple(_as_fraction(x) for x in ps)

    def validate(self) -> None:
        if self.mode not in ("exhaustive", "random", "fixture"):
            raise GenerationError(f"unknown mode {self.mode!r}")
        if self.filter not in FILTERS:
            raise GenerationError(f"unknown filter {self.filter!r}; expected one of {FILTERS}")
        if self.mode == "exhaustive" and not 0 <= self.n <= MAX_EXHAUSTIVE_N:
            raise GenerationError(f"exhaustive mode needs 0 <= n <= {MAX_EXHAUSTIVE_N}, got {self.n}")
        if self.mode == "random":
            if self.count < 1:
                raise GenerationError("random mode needs count >= 1")
            if self.n < 0 or (self.n_max is not None and self.n_max < self.n):
                raise GenerationError(f"bad vertex range {self.n}..{self.n_max}")
            for p in self.probabilities():
                if not 0 < p < 1:
                    raise GenerationError(f"edge probability must lie strictly between 0 and 1, got {p}")
        if not 0 <= self.seed <= MASK64:
            raise GenerationError("seed must be a 64-bit unsigned integer")


def passes(g: Graph, filter: str) -> bool:
    if filter == "none":
        return True
    if filter == "min-degree-3":
        return g.n > 0 and min(g.degrees()) >= 3
    if filter == "theorem-preconditions":
        # cheap degree test first; most rejected samples fail it
        return g.n > 0 and min(g.degrees()) >= 3 and precondition_report(g).satisfied
    raise GenerationError(f"unknown filter {filter!r}")


def edge_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _filtered_masks(n: int, filter: str) -> np.ndarray:
    """Edge masks (bit k = k-th pair of :func:`edge_order`) passing ``filter``, ascending."""
    if filter not in FILTERS:
        raise GenerationError(f"unknown filter {filter!r}")
    pairs = edge_order(n)
    total = 1 << len(pairs)
    masks = np.arange(total, dtype=np.int64)
    if filter == "none" or n == 0:
        return masks if filter == "none" else masks[:0]
    rows = [np.zeros(total, dtype=np.int64) for _ in range(n)]
    deg = [np.zeros(total, dtype=np.int8) for _ in range(n)]
    for k, (i, j) in enumerate(pairs):
        bit = (masks >> k) & 1
        rows[i] |= bit << j
        rows[j] |= bit << i
        deg[i] += bit.astype(np.int8)
        deg[j] += bit.astype(np.int8)
    keep = np.ones(total, dtype=bool)
    for d in deg:
        keep &= d >= 3
    if filter == "theorem-preconditions":
        full = (1 << n) - 1
        # diameter <= 2: closed 2-ball of every vertex is everything; diameter 1 (complete) excluded
        for v in range(n):
            ball = rows[v] | (1 << v)
            for u in range(n):
                ball = np.where((rows[v] >> u) & 1 == 1, ball | rows[u], ball)
            keep &= ball == full
        keep &= masks != total - 1
    return masks[keep]


def _mask_to_graph(n: int, pairs: Sequence[tuple[int, int]], mask: int) -> Graph:
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return Graph(n, rows)


def enumerate_labeled(n: int, filter: str = "none") -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices in edge-mask order, filtered."""
    if not 0 <= n <= MAX_EXHAUSTIVE_N:
        raise GenerationError(f"exhaustive enumeration supports 0 <= n <= {MAX_EXHAUSTIVE_N}, got {n}")
    pairs = edge_order(n)
    for mask in _filtered_masks(n, filter).tolist():
        yield _mask_to_graph(n, pairs, mask)


def enumerate_labeled_graph6(n: int, filter: str = "none") -> Iterator[bytes]:
    """graph6 records of :func:`enumerate_labeled`, packed straight from the masks.

    The mask bit order is the graph6 bit order, so each record is the size
    byte followed by the mask's bits in 6-bit groups, most significant first.
    """
    if not 0 <= n <= MAX_EXHAUSTIVE_N:
        raise GenerationError(f"exhaustive enumeration supports 0 <= n <= {MAX_EXHAUSTIVE_N}, got {n}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    masks = _filtered_masks(n, filter)
    out = np.empty((len(masks), nbytes + 1), dtype=np.uint8)
    out[:, 0] = 63 + n
    for byte in range(nbytes):
        val = np.zeros(len(masks), dtype=np.int64)
        for off in range(6):
            k = byte * 6 + off
            if k < nbits:
                val |= ((masks >> k) & 1) << (5 - off)
        out[:, byte + 1] = 63 + val
    for row in out:
        yield row.tobytes()


def _sample_gnp(rng: XorShift64Star, n: int, p: Fraction) -> Graph:
    threshold = (p * (1 << 64)).__floor__()
    rows = [0] * n
    # xorshift64* inlined; this loop dominates rejection sampling
    x = rng.state
    for j in range(1, n):
        for i in range(j):
            x ^= x >> 12
            x ^= (x << 25) & MASK64
            x ^= x >> 27
            if (x * 0x2545F4914F6CDD1D) & MASK64 < threshold:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    rng.state = x
    return Graph(n, rows)


def random_graphs(spec: GenSpec) -> Iterator[Graph]:
    """Seeded G(n, p) samples, rejection-filtered; exactly ``spec.count`` graphs.

    Each draw first picks ``n`` (when ``n_max`` is set) and ``p`` (when
    several are given) from the same generator, then samples edges in
    graph6 column order, keeping an edge when the next output is below
    ``floor(p * 2**64)``.
    """
    if spec.mode != "random":
        raise GenerationError("random_graphs needs a random-mode GenSpec")
    spec.validate()
    rng = XorShift64Star(spec.seed)
    ps = spec.probabilities()
    lo = spec.n
    hi = spec.n if spec.n_max is None else spec.n_max
    emitted = 0
    misses = 0
    while emitted < spec.count:
        n = lo if hi == lo else lo + rng.below(hi - lo + 1)
        p = ps[0] if len(ps) == 1 else ps[rng.below(len(ps))]
        g = _sample_gnp(rng, n, p)
        if passes(g, spec.filter):
            emitted += 1
            misses = 0
            yield g
        else:
            misses += 1
            if misses >= REJECTION_CAP:
                raise ProgressError(
                    f"{REJECTION_CAP} consecutive samples rejected by filter {spec.filter!r}; "
                    "raise the edge probability or change n"
                )


def generate(spec: GenSpec) -> Iterator[Graph]:
    spec.validate()
    if spec.mode == "exhaustive":
        return enumerate_labeled(spec.n, spec.filter)
    if spec.mode == "random":
        return random_graphs(spec)
    from .fixtures import fixture

    if spec.name is None:
        raise GenerationError("fixture mode needs a fixture name")
    return iter([fixture(spec.name)])
