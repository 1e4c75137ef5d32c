"""Named test graphs.

``figure5-case1`` is the 13-vertex polarity graph of PG(2, 3) (C4-free,
diameter 2, degrees 3 and 4), labelled so that vertices 0..9 play
v1, v2, a, b, d, v6, w1, w2, w3, w4.  Besides the twelve edges of the
Case 1 drawing, the role vertices also span v1w1, v2w3, aw2 and w3w4;
no diameter-2 C4-free labelling with only the drawn edges was found.

``figure6-case2`` is the Petersen graph labelled so that vertices 0..7
play v1, v2, a, b, c, d, x, y; the role vertices span the nine drawn
edges plus xy, and vertices 8, 9 complete every degree to 3.
"""

from __future__ import annotations

from .graph import Graph

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)

FIGURE5_ROLES = {"v1": 0, "v2": 1, "a": 2, "b": 3, "d": 4, "v6": 5, "w1": 6, "w2": 7, "w3": 8, "w4": 9}
FIGURE5_DRAWN = [
    ("v1", "v2"), ("v1", "a"), ("v2", "a"), ("v1", "b"), ("v2", "d"), ("b", "v6"),
    ("d", "v6"), ("b", "w1"), ("v6", "w2"), ("d", "w3"), ("w4", "w2"), ("w4", "w1"),
]
FIGURE5_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 6), (1, 2), (1, 4), (1, 8), (2, 7), (2, 10), (3, 5),
    (3, 6), (3, 12), (4, 5), (4, 8), (4, 11), (5, 7), (6, 9), (6, 11), (7, 9), (7, 10),
    (8, 9), (8, 12), (10, 11), (10, 12),
]

FIGURE6_ROLES = {"v1": 0, "v2": 1, "a": 2, "b": 3, "c": 4, "d": 5, "x": 6, "y": 7}
FIGURE6_DRAWN = [
    ("v1", "v2"), ("v1", "a"), ("v1", "b"), ("v2", "c"), ("v2", "d"),
    ("a", "x"), ("c", "x"), ("b", "y"), ("d", "y"),
]
FIGURE6_EDGES = [
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 9), (3, 7), (3, 8), (4, 6),
    (4, 8), (5, 7), (5, 9), (6, 7), (8, 9),
]

_BUILDERS = {
    "petersen": lambda: Graph.from_edge_list(10, PETERSEN_EDGES),
    "k33": lambda: Graph.from_edge_list(6, [(i, j) for i in range(3) for j in range(3, 6)]),
    "k4": lambda: Graph.from_edge_list(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]),
    "figure5-case1": lambda: Graph.from_edge_list(13, FIGURE5_EDGES),
    "figure6-case2": lambda: Graph.from_edge_list(10, FIGURE6_EDGES),
}
FIXTURE_NAMES = tuple(_BUILDERS)


def fixture(name: str) -> Graph:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}") from None
