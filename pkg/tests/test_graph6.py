"""Test the graph6 codec against known strings and whole enumerated populations."""

import random

import pytest

from transit_spectra.core.families import complete, path, star
from transit_spectra.core.graph import Graph
from transit_spectra.core.graph6 import parse_graph6, to_graph6
from transit_spectra.core.validate import Graph6ErrorKind, Graph6ParseError, UnsupportedOrderError
from transit_spectra.enumeration import connected_graphs, free_trees


def random_graph(rng: random.Random, n: int) -> Graph:
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)


@pytest.mark.parametrize(
    "code, expected",
    [
        ("@", Graph.empty(1)),
        ("A_", complete(2)),
        ("Bw", complete(3)),
        ("Cs", star(4)),
        ("Ch", path(4)),
        ("C~", complete(4)),
        ("Ds_", star(5)),
    ],
)
def test_known_strings(code, expected):
    """Decode and encode small graphs with hand-checked strings."""
    assert parse_graph6(code) == expected
    assert to_graph6(expected) == code


def test_header_and_newline_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete(3)


@pytest.mark.parametrize(
    "code, kind",
    [
        ("", Graph6ErrorKind.EMPTY),
        (">>sparse6<<Bw", Graph6ErrorKind.BAD_HEADER),
        ("B ", Graph6ErrorKind.BAD_CHARACTER),
        ("C", Graph6ErrorKind.BAD_LENGTH),
        ("Bww", Graph6ErrorKind.TRAILING_DATA),
        ("Bx", Graph6ErrorKind.PADDING),
    ],
)
def test_malformed_lines(code, kind):
    with pytest.raises(Graph6ParseError) as excinfo:
        parse_graph6(code)
    assert excinfo.value.kind == kind


def test_unsupported_orders():
    with pytest.raises(UnsupportedOrderError):
        parse_graph6("~??~")
    with pytest.raises(UnsupportedOrderError):
        parse_graph6("?")
    with pytest.raises(UnsupportedOrderError):
        to_graph6(Graph.empty(63))


@pytest.mark.parametrize("n", range(1, 8))
def test_roundtrip_connected_population(n):
    """Every connected graph on n <= 7 vertices decodes back to itself."""
    for g in connected_graphs(n):
        code = to_graph6(g)
        assert len(code) == 1 + (n * (n - 1) // 2 + 5) // 6
        assert parse_graph6(code) == g, f"roundtrip failed for {code}"


@pytest.mark.parametrize("n", [8, 12])
def test_roundtrip_trees(n):
    for t in free_trees(n):
        assert parse_graph6(to_graph6(t)) == t


def test_roundtrip_random_graphs():
    """10^4 random graphs decode back to themselves."""
    rng = random.Random(11)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(1, 62 if rng.random() < 0.01 else 12))
        assert parse_graph6(to_graph6(g)) == g
