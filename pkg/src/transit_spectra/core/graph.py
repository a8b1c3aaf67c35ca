"""Graph representation, connectivity, all-pairs distances and transmissions.

Everything here is exact integer arithmetic; floating point starts in ``spectral``.
"""

from dataclasses import dataclass
from typing import Iterable

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict

from transit_spectra.core.constants import MAX_ORDER
from transit_spectra.core.validate import GraphError, NotConnectedError, UnsupportedOrderError


def _bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..order-1.

    ``adjacency[i]`` is a bitmask of the neighbours of ``i``.
    """

    order: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise UnsupportedOrderError(f"Order {self.order} outside 1..{MAX_ORDER}")
        if len(self.adjacency) != self.order:
            raise GraphError(
                f"Adjacency has {len(self.adjacency)} rows for order {self.order}"
            )
        full = (1 << self.order) - 1
        for i, row in enumerate(self.adjacency):
            if row & ~full:
                raise GraphError(f"Vertex {i} has a neighbour outside 0..{self.order - 1}")
            if row >> i & 1:
                raise GraphError(f"Self-loop at vertex {i}")
            for j in _bits(row):
                if not self.adjacency[j] >> i & 1:
                    raise GraphError(f"Adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, order: int, adjacency: tuple[int, ...]) -> "Graph":
        """Build without validation; callers guarantee the invariants."""
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adjacency", adjacency)
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list.

        Args:
            order: Number of vertices
            edges: Unordered vertex pairs; duplicates are ignored

        Raises:
            GraphError: On self-loops or out-of-range endpoints
        """
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"Edge ({u}, {v}) outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted."""
        pairs = []
        for u, row in enumerate(self.adjacency):
            pairs.extend((u, v) for v in _bits(row >> (u + 1) << (u + 1)))
        return pairs

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.order)):
            raise GraphError(f"{perm} is not a permutation of 0..{self.order - 1}")
        rows = [0] * self.order
        for v, row in enumerate(self.adjacency):
            target = 0
            for u in _bits(row):
                target |= 1 << perm[u]
            rows[perm[v]] = target
        return Graph._trusted(self.order, tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        """Remove ``v``; vertices above it shift down by one."""
        if self.order == 1:
            raise UnsupportedOrderError("Cannot delete the only vertex")
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adjacency):
            if u == v:
                continue
            rows.append((row & low) | (row >> 1 & ~low))
        return Graph._trusted(self.order - 1, tuple(rows))

    def add_vertex(self, neighbours: int) -> "Graph":
        """Append vertex ``order`` adjacent to the vertices in the ``neighbours`` mask."""
        if neighbours >> self.order:
            raise GraphError("Neighbour mask exceeds the current order")
        new = self.order
        rows = tuple(
            row | (1 << new) if neighbours >> u & 1 else row
            for u, row in enumerate(self.adjacency)
        )
        return Graph._trusted(self.order + 1, rows + (neighbours,))

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph._trusted(
            self.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adjacency))
        )

    def reach(self, source: int = 0, removed: int = 0) -> int:
        """Mask of vertices reachable from ``source`` avoiding the ``removed`` mask."""
        seen = 1 << source
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adjacency[v]
            frontier = nxt & ~seen & ~removed
            seen |= frontier
        return seen


def to_networkx(g: Graph) -> nx.Graph:
    """The same graph as a networkx graph on nodes 0..order-1."""
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Bitset graph of a networkx graph; nodes are numbered in iteration order."""
    index = {node: i for i, node in enumerate(h.nodes)}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges))


@dataclass(frozen=True, slots=True)
class DistanceMatrix:
    """Hop-count distance matrix of a connected graph (integer entries)."""

    order: int
    entries: np.ndarray

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.entries[i])


class TransmissionProfile(BaseModel):
    """Transmissions D_i with D_max, D_min, the Wiener index and gap n*D_max - 2W."""

    model_config = ConfigDict(frozen=True)

    transmissions: tuple[int, ...]
    dmax: int
    dmin: int
    wiener: int
    gap: int
    argmax: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.transmissions)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    return g.reach(0) == (1 << g.order) - 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.order
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adjacency[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in _bits(frontier):
            dist[v] = level
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs shortest-path lengths by one BFS per vertex.

    Raises:
        NotConnectedError: If the graph is disconnected
    """
    if not is_connected(g):
        raise NotConnectedError(f"Graph of order {g.order} is not connected")

    rows = [bfs_distances(g, v) for v in range(g.order)]
    entries = np.array(rows, dtype=np.int64)
    entries.setflags(write=False)
    return DistanceMatrix(order=g.order, entries=entries)


def transmission_profile(d: DistanceMatrix) -> TransmissionProfile:
    """Row sums of the distance matrix and the derived integers."""
    transmissions = tuple(int(x) for x in d.entries.sum(axis=1))
    dmax = max(transmissions)
    dmin = min(transmissions)
    total = sum(transmissions)
    return TransmissionProfile(
        transmissions=transmissions,
        dmax=dmax,
        dmin=dmin,
        wiener=total // 2,
        gap=d.order * dmax - total,
        argmax=tuple(i for i, t in enumerate(transmissions) if t == dmax),
    )


def is_transmission_regular(p: TransmissionProfile) -> bool:
    return p.gap == 0
