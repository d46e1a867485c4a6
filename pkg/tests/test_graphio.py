"""Graph type, edge-list and graph6 codecs, fixture corpus hygiene."""
import random

import pytest

from circulant_lab import fixtures
from circulant_lab.errors import (
    BadCharacter,
    DuplicateEdge,
    LoopEdge,
    MalformedHeader,
    TooLargeForFormat,
    TruncatedBits,
    VertexOutOfRange,
)
from circulant_lab.graphio import (
    from_edges,
    girth,
    is_connected,
    is_cubic,
    parse_edgelist,
    parse_graph6,
    serialize,
    to_graph6_line,
)
from helpers import random_simple_graph


def test_parse_edgelist_k4():
    text = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    g = parse_edgelist(text)
    assert g.n == 4 and g.edge_count == 6
    assert is_cubic(g) and is_connected(g)


def test_parse_edgelist_single_edge():
    g = parse_edgelist("2 1\n0 1\n")
    assert g.n == 2 and g.edge_count == 1


def test_parse_edgelist_errors():
    with pytest.raises(VertexOutOfRange):
        parse_edgelist("3 1\n0 3\n")
    with pytest.raises(LoopEdge):
        parse_edgelist("3 1\n1 1\n")
    with pytest.raises(DuplicateEdge):
        parse_edgelist("3 2\n0 1\n1 0\n")
    with pytest.raises(MalformedHeader):
        parse_edgelist("nope\n")
    with pytest.raises(MalformedHeader):
        parse_edgelist("3 2\n0 1\n")  # promised 2 edges, got 1
    with pytest.raises(MalformedHeader):
        parse_edgelist("")


def test_graph6_known_strings():
    k4 = parse_graph6("C~")
    assert k4.n == 4 and k4.edge_count == 6
    single = parse_graph6("A_")
    assert single.n == 2 and single.edge_count == 1
    empty = parse_graph6("A?")
    assert empty.n == 2 and empty.edge_count == 0


def test_graph6_header_tolerated():
    g = parse_graph6(">>graph6<<C~")
    assert g.n == 4 and g.edge_count == 6


def test_graph6_long_form():
    # n = 2 forced through the 18-bit long form: '~' '?' '?' 'A', then one
    # adjacency char with the single bit set
    g = parse_graph6("~??A_")
    assert g.n == 2 and g.edge_count == 1


def test_graph6_errors():
    with pytest.raises(BadCharacter):
        parse_graph6("C~~")  # trailing garbage
    with pytest.raises(TruncatedBits):
        parse_graph6("C")
    with pytest.raises(BadCharacter):
        parse_graph6("C\x01\x01")
    with pytest.raises(TruncatedBits):
        parse_graph6("")


def test_serialize_k4_round_trip():
    k4 = fixtures.load("k4")
    assert to_graph6_line(k4) == "C~"
    assert serialize(k4, "edgelist").startswith("4 6\n")


def test_serialize_too_large():
    big = from_edges(63, [(0, 1)])
    with pytest.raises(TooLargeForFormat):
        serialize(big, "graph6")


def test_round_trip_random_graphs():
    rng = random.Random(42)
    for _ in range(30):
        n = rng.randrange(1, 30)
        g = random_simple_graph(rng, n, rng.random())
        assert parse_edgelist(serialize(g, "edgelist")) == g
        assert parse_graph6(serialize(g, "graph6")) == g


def test_empty_graph_edgelist():
    g = from_edges(1, [])
    assert serialize(g, "edgelist") == "1 0\n"
    assert parse_edgelist("1 0\n") == g


def test_connectivity():
    assert is_connected(fixtures.load("k33"))
    two_k4 = from_edges(8, [(u, v) for u in range(4) for v in range(u + 1, 4)]
                        + [(u + 4, v + 4) for u in range(4) for v in range(u + 1, 4)])
    assert not is_connected(two_k4)
    assert is_cubic(two_k4)


def test_fixture_corpus_stats():
    expected = {
        "k4": (4, 6, 3),
        "k33": (6, 9, 4),
        "cube3": (8, 12, 4),
        "petersen": (10, 15, 5),
        "heawood": (14, 21, 6),
        "pappus": (18, 27, 6),
    }
    for name, (n, m, g) in expected.items():
        graph = fixtures.load(name)
        assert graph.n == n
        assert graph.edge_count == m
        assert girth(graph) == g
        assert is_cubic(graph)
        assert is_connected(graph)


def test_girth_forest():
    path = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert girth(path) is None
