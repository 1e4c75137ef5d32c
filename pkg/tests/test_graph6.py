import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_graph
from diam2cycles.fixtures import FIXTURE_NAMES, fixture
from diam2cycles.graph import from_edge_list
from diam2cycles.graph6 import MAX_N, Graph6ParseError, UnsupportedSizeError, encode_graph6, parse_graph6


def nx_decode(data: bytes):
    h = nx.from_graph6_bytes(data)
    return from_edge_list(h.number_of_nodes(), h.edges())


def nx_encode(g) -> bytes:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).rstrip(b"\n")


def test_k4():
    assert parse_graph6(b"C~") == fixture("k4") == nx_decode(b"C~")
    assert encode_graph6(fixture("k4")) == b"C~"


def test_empty_five():
    assert parse_graph6(b"D??") == from_edge_list(5, []) == nx_decode(b"D??")
    assert encode_graph6(from_edge_list(5, [])) == b"D??"


def test_prefix_and_newline():
    assert parse_graph6(b">>graph6<<C~\n") == fixture("k4")


@pytest.mark.parametrize("data, offset", [
    (b"C~\xc8", 2),
    (b"\xc8C~", 0),
    (b"C~~", 2),
    (b"C", 1),
    (b"", 0),
    (b"C~\n\n", 2),
])
def test_malformed(data, offset):
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6(data)
    assert info.value.offset == offset


def test_nonzero_padding_rejected():
    # n=2 has one payload bit; the remaining five must be zero
    assert parse_graph6(b"A_") == from_edge_list(2, [(0, 1)])
    with pytest.raises(Graph6ParseError):
        parse_graph6(b"A`")


def test_size_limits():
    with pytest.raises(UnsupportedSizeError):
        encode_graph6(from_edge_list(MAX_N + 1, []))
    with pytest.raises(UnsupportedSizeError):
        parse_graph6(b"~~??????")


def test_four_byte_header():
    g = from_edge_list(100, [(0, 99), (5, 6), (50, 70)])
    data = encode_graph6(g)
    assert data[0] == 126
    assert data == nx_encode(g)
    assert parse_graph6(data) == g


def test_agrees_with_networkx(rnd):
    for _ in range(200):
        g = random_graph(rnd, rnd.randint(0, 70), rnd.random())
        data = encode_graph6(g)
        assert data == nx_encode(g)
        assert nx_decode(data) == g


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_round_trip(name):
    g = fixture(name)
    assert parse_graph6(encode_graph6(g)) == g


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 62).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))))
))
def test_round_trip_property(case):
    n, pairs = case
    g = from_edge_list(n, [(u, v) for u, v in pairs if u != v])
    data = encode_graph6(g)
    assert parse_graph6(data) == g
    assert encode_graph6(parse_graph6(data)) == data
