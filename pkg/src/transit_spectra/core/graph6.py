"""graph6 codec for simple undirected graphs of order up to 62.

Lines are checked here so that every malformed input maps to a ``Graph6ErrorKind``;
the bit packing itself is done by networkx.
"""

import networkx as nx

from transit_spectra.core.constants import GRAPH6_MAX_ORDER
from transit_spectra.core.graph import Graph, from_networkx, to_networkx
from transit_spectra.core.validate import Graph6ErrorKind, Graph6ParseError, UnsupportedOrderError

GRAPH6_HEADER = ">>graph6<<"


def _data_length(order: int) -> int:
    bits = order * (order - 1) // 2
    return (bits + 5) // 6


def _check_line(line: str) -> None:
    """Raise the matching error for a header-stripped graph6 line."""
    if not line:
        raise Graph6ParseError(Graph6ErrorKind.EMPTY, "empty graph6 line")

    codes = [ord(ch) - 63 for ch in line]
    for position, code in enumerate(codes):
        if not 0 <= code <= 63:
            raise Graph6ParseError(
                Graph6ErrorKind.BAD_CHARACTER,
                f"character {line[position]!r} at position {position} outside '?'..'~'",
            )

    order = codes[0]
    if order == 63:
        raise UnsupportedOrderError("Extended graph6 headers (order > 62) are not supported")
    if order == 0:
        raise UnsupportedOrderError("graph6 line encodes the empty graph of order 0")

    expected = _data_length(order)
    data = codes[1:]
    if len(data) < expected:
        raise Graph6ParseError(
            Graph6ErrorKind.BAD_LENGTH,
            f"order {order} needs {expected} data characters, found {len(data)}",
        )
    if len(data) > expected:
        raise Graph6ParseError(
            Graph6ErrorKind.TRAILING_DATA,
            f"{len(data) - expected} characters after the bit field of order {order}",
        )

    padding = 6 * expected - order * (order - 1) // 2
    if data and data[-1] & ((1 << padding) - 1):
        raise Graph6ParseError(Graph6ErrorKind.PADDING, "nonzero padding bits")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    A trailing newline and the optional ``>>graph6<<`` header are accepted.

    Args:
        text: graph6 encoded graph

    Returns:
        The decoded graph

    Raises:
        Graph6ParseError: If the line is malformed (see ``Graph6ErrorKind``)
        UnsupportedOrderError: For extended (order > 62) or order-0 headers
    """
    line = text.rstrip("\r\n")
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    elif line.startswith(">>"):
        raise Graph6ParseError(Graph6ErrorKind.BAD_HEADER, f"unknown header in {line[:12]!r}")
    _check_line(line)

    return from_networkx(nx.from_graph6_bytes(line.encode("ascii")))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (no trailing newline).

    Raises:
        UnsupportedOrderError: If the order exceeds 62
    """
    if g.order > GRAPH6_MAX_ORDER:
        raise UnsupportedOrderError(
            f"Order {g.order} needs an extended graph6 header (max {GRAPH6_MAX_ORDER})"
        )

    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()
