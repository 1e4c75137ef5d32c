import random

import pytest

from diam2cycles.graph import Graph


def random_graph(rnd: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for j in range(n) for i in range(j) if rnd.random() < p]
    return Graph.from_edge_list(n, edges)


def floyd_warshall(g: Graph):
    inf = float("inf")
    n = g.n
    d = [[0 if i == j else (1 if g.adjacent(i, j) else inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@pytest.fixture
def rnd():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
