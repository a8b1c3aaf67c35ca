"""Canonical labeling by partition refinement and individualization.

The initial colouring ranks vertices by (degree, sorted neighbour degrees, distance
profile). Colour refinement then splits cells by the multiset of neighbour colours until the
partition is equitable. Non-discrete partitions are resolved by individualizing each vertex
of the first non-singleton cell in turn; every discrete leaf fixes a vertex order, and the
canonical order is the one with the lexicographically smallest upper-triangle bit string.
Leaves with equal bit strings yield automorphisms, which prune siblings in the same orbit.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from transit_spectra.core.constants import CANONICAL_MAX_ORDER
from transit_spectra.core.graph import Graph, bfs_distances
from transit_spectra.core.graph6 import to_graph6
from transit_spectra.core.validate import UnsupportedOrderError


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """Order plus the canonical upper-triangle bit string (column-major, big-endian bytes).

    Equal forms mean isomorphic graphs.
    """

    order: int
    bits: bytes

    def to_graph(self) -> Graph:
        pairs = self.order * (self.order - 1) // 2
        value = int.from_bytes(self.bits, "big")
        rows = [0] * self.order
        position = pairs - 1
        for j in range(1, self.order):
            for i in range(j):
                if value >> position & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                position -= 1
        return Graph(self.order, tuple(rows))

    def to_graph6(self) -> str:
        return to_graph6(self.to_graph())


def _rank(signatures: Sequence) -> list[int]:
    index = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [index[s] for s in signatures]


def _initial_colors(g: Graph) -> list[int]:
    degrees = g.degrees()
    invariants = []
    for v in range(g.order):
        neighbour_degrees = tuple(sorted(degrees[u] for u in g.neighbors(v)))
        distance_profile = tuple(sorted(Counter(bfs_distances(g, v)).items()))
        invariants.append((degrees[v], neighbour_degrees, distance_profile))
    return _rank(invariants)


def _refine(neighbours: Sequence[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Equitable refinement; returns contiguous colours 0..k-1."""
    count = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in adjacent)))
            for v, adjacent in enumerate(neighbours)
        ]
        refined = _rank(signatures)
        refined_count = max(refined) + 1
        if refined_count == count:
            return refined
        colors, count = refined, refined_count


class _Search:
    """Depth-first search over the individualization-refinement tree."""

    def __init__(self, g: Graph):
        self.order = g.order
        self.adjacency = g.adjacency
        self.neighbours = [g.neighbors(v) for v in range(g.order)]
        self.best_key: int | None = None
        self.best_order: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self, colors: list[int]) -> tuple[int, list[int]]:
        self._visit(_refine(self.neighbours, colors), ())
        return self.best_key, self.best_order

    def _key(self, order: list[int]) -> int:
        key = 0
        for j in range(1, self.order):
            row = self.adjacency[order[j]]
            for i in range(j):
                key = key << 1 | (row >> order[i] & 1)
        return key

    def _visit(self, colors: list[int], path: tuple[int, ...]) -> None:
        n = self.order
        cells: list[list[int]] = [[] for _ in range(max(colors) + 1)]
        for v, c in enumerate(colors):
            cells[c].append(v)

        if len(cells) == n:
            order = [cell[0] for cell in cells]
            key = self._key(order)
            if self.best_key is None or key < self.best_key:
                self.best_key, self.best_order = key, order
            elif key == self.best_key:
                automorphism = [0] * n
                for a, b in zip(self.best_order, order):
                    automorphism[a] = b
                self.automorphisms.append(automorphism)
            return

        target = next(cell for cell in cells if len(cell) > 1)
        explored: list[int] = []
        for v in target:
            if explored and self._in_explored_orbit(v, explored, path):
                continue
            child = [2 * c + 1 for c in colors]
            child[v] = 2 * colors[v]
            self._visit(_refine(self.neighbours, child), path + (v,))
            explored.append(v)

    def _in_explored_orbit(self, v: int, explored: list[int], path: tuple[int, ...]) -> bool:
        """Orbit test under the known automorphisms that fix ``path`` pointwise."""
        generators = [p for p in self.automorphisms if all(p[w] == w for w in path)]
        if not generators:
            return False
        parent = list(range(self.order))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in generators:
            for x, y in enumerate(p):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        root = find(v)
        return any(find(u) == root for u in explored)


def canonical_search(g: Graph) -> tuple[int, list[int]]:
    """Canonical key and vertex order (``order[i]`` is the vertex at canonical position i).

    Raises:
        UnsupportedOrderError: If the order exceeds 16
    """
    if g.order > CANONICAL_MAX_ORDER:
        raise UnsupportedOrderError(
            f"Canonical labeling supports n <= {CANONICAL_MAX_ORDER}, got {g.order}"
        )
    if g.order == 1:
        return 0, [0]
    return _Search(g).run(_initial_colors(g))


def _form_from_key(order: int, key: int) -> CanonicalForm:
    pairs = order * (order - 1) // 2
    return CanonicalForm(order=order, bits=key.to_bytes((pairs + 7) // 8, "big"))


def canonical_form(g: Graph) -> CanonicalForm:
    """Labeling-invariant form; equal iff the graphs are isomorphic."""
    key, _ = canonical_search(g)
    return _form_from_key(g.order, key)


def canonical_graph(g: Graph) -> Graph:
    """The graph relabeled into canonical order."""
    _, order = canonical_search(g)
    perm = [0] * g.order
    for position, v in enumerate(order):
        perm[v] = position
    return g.relabel(perm)
