"""Connected graphs, one per isomorphism class, by canonical augmentation.

A child of order n is a connected parent of order n - 1 plus a new vertex joined to a
nonempty subset of the parent. The canonical deletion vertex of a child is, among its
non-cut vertices with the largest (degree, sorted neighbour degrees) invariant, the one that
comes first in canonical order. A child is kept iff its canonical deletion gives back a graph
isomorphic to the parent; this admits each isomorphism class from exactly one parent class.
Children of the same parent are deduplicated by canonical form.
"""

from functools import lru_cache
from typing import Iterator

from transit_spectra.core.constants import CONNECTED_EXTENDED_MAX_ORDER, CONNECTED_MAX_ORDER
from transit_spectra.core.graph import Graph, is_connected
from transit_spectra.core.validate import UnsupportedOrderError
from transit_spectra.enumeration.canonical import canonical_search


def _is_non_cut(g: Graph, v: int) -> bool:
    removed = 1 << v
    start = 1 if v == 0 else 0
    full = (1 << g.order) - 1
    return g.reach(start, removed) == full & ~removed


def _invariant(g: Graph, v: int, degrees: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return degrees[v], tuple(sorted(degrees[u] for u in g.neighbors(v)))


def _augment(parent: Graph, parent_key: int) -> Iterator[tuple[Graph, int]]:
    """Children of ``parent`` whose canonical deletion returns the parent class."""
    new = parent.order
    seen: set[int] = set()

    for mask in range(1, 1 << parent.order):
        child = parent.add_vertex(mask)
        degrees = child.degrees()
        target = _invariant(child, new, degrees)

        # The new vertex is never a cut vertex; reject as soon as a non-cut vertex beats it.
        tied = [new]
        rejected = False
        for u in range(new):
            if degrees[u] < target[0]:
                continue
            invariant = _invariant(child, u, degrees)
            if invariant < target or not _is_non_cut(child, u):
                continue
            if invariant > target:
                rejected = True
                break
            tied.append(u)
        if rejected:
            continue

        key, order = canonical_search(child)
        if key in seen:
            continue

        if len(tied) > 1:
            position = {v: i for i, v in enumerate(order)}
            deletion = min(tied, key=position.__getitem__)
            if deletion != new:
                reduced_key, _ = canonical_search(child.delete_vertex(deletion))
                if reduced_key != parent_key:
                    continue

        seen.add(key)
        yield child, key


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[Graph, int], ...]:
    """All connected graphs of order n with their canonical keys, in generation order."""
    if n == 1:
        return ((Graph.empty(1), 0),)
    return tuple(child for parent, key in _level(n - 1) for child in _augment(parent, key))


def connected_graphs(
    n: int,
    *,
    branch: int = 0,
    branches: int = 1,
    allow_order_10: bool = False,
) -> Iterator[Graph]:
    """Stream one connected graph per isomorphism class on n vertices.

    The stream is deterministic. ``branch``/``branches`` select the children of every
    ``branches``-th parent starting at ``branch``; the branches partition the full stream.

    Args:
        n: Order, 1..9 (10 with ``allow_order_10``)
        branch: Index of this sub-stream, 0 <= branch < branches
        branches: Number of disjoint sub-streams
        allow_order_10: Lift the cap to 10

    Raises:
        UnsupportedOrderError: If n is outside the cap
        ValueError: On an invalid branch selection
    """
    cap = CONNECTED_EXTENDED_MAX_ORDER if allow_order_10 else CONNECTED_MAX_ORDER
    if not 1 <= n <= cap:
        raise UnsupportedOrderError(f"Connected-graph enumeration supports n in 1..{cap}, got {n}")
    if branches < 1 or not 0 <= branch < branches:
        raise ValueError(f"Invalid branch {branch} of {branches}")

    if n == 1:
        if branch == 0:
            yield Graph.empty(1)
        return

    for index, (parent, key) in enumerate(_level(n - 1)):
        if index % branches != branch:
            continue
        for child, _ in _augment(parent, key):
            if is_connected(child):
                yield child
