"""Constructors and recognizers for stars, complete and complete multipartite graphs,
wheels and DVDR graphs.

Constructors always put the distinguished vertex (star centre, apex) at label 0.
"""

from typing import Iterator, Sequence

from transit_spectra.core.constants import MAX_ORDER
from transit_spectra.core.graph import Graph
from transit_spectra.core.schemas import DvdrWitness
from transit_spectra.core.validate import FamilyError, NotRegularError


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise FamilyError(f"Star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"Complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"Path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"Cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Vertices are numbered part by part; adjacent iff in different parts.

    Raises:
        FamilyError: On an empty part list or a non-positive part
    """
    if not parts:
        raise FamilyError("Complete multipartite graph needs at least one part")
    if any(size < 1 for size in parts):
        raise FamilyError(f"Part sizes must be positive, got {tuple(parts)}")

    n = sum(parts)
    if n > MAX_ORDER:
        raise FamilyError(f"Order {n} exceeds {MAX_ORDER}")

    full = (1 << n) - 1
    rows = []
    start = 0
    for size in parts:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, tuple(rows))


def cocktail_apex(n: int) -> Graph:
    """K_{1,2,...,2}: an apex plus the cocktail-party graph on n - 1 vertices.

    Raises:
        FamilyError: If n is even or below 3
    """
    if n < 3 or n % 2 == 0:
        raise FamilyError(f"K_(1,2,...,2) needs odd n >= 3, got {n}")
    return complete_multipartite((1,) + (2,) * ((n - 1) // 2))


def dvdr_join(h: Graph) -> Graph:
    """Join a new apex (label 0) to every vertex of a regular graph.

    Raises:
        NotRegularError: If ``h`` is not regular
    """
    if h.regular_degree() is None:
        raise NotRegularError(f"Degree sequence {sorted(h.degrees())} is not regular")
    n = h.order + 1
    rows = [((1 << n) - 1) & ~1]
    rows.extend((row << 1) | 1 for row in h.adjacency)
    return Graph(n, tuple(rows))


def wheel(n: int) -> Graph:
    """Apex joined to C_{n-1}; a 2-DVDR graph."""
    if n < 4:
        raise FamilyError(f"Wheel needs n >= 4, got {n}")
    return dvdr_join(cycle(n - 1))


def is_dvdr(g: Graph) -> DvdrWitness | None:
    """Smallest-label vertex of degree n-1 whose deletion leaves a regular graph.

    The witness regularity is the common degree of G - v.
    """
    n = g.order
    if n == 1:
        return DvdrWitness(vertex=0, regularity=0, apex_degree=0)
    for v in range(n):
        if g.degree(v) != n - 1:
            continue
        r = g.delete_vertex(v).regular_degree()
        if r is not None:
            return DvdrWitness(vertex=v, regularity=r, apex_degree=n - 1)
    return None


def cycle_partitions(total: int, smallest: int = 3) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into nondecreasing parts, each at least ``smallest``."""
    if total == 0:
        yield ()
        return
    for first in range(smallest, total + 1):
        for rest in cycle_partitions(total - first, first):
            yield (first,) + rest


def regular_complement_of_cycles(lengths: Sequence[int]) -> Graph:
    """Complement of the disjoint union of cycles with the given lengths."""
    if not lengths or any(length < 3 for length in lengths):
        raise FamilyError(f"Cycle lengths must all be at least 3, got {tuple(lengths)}")
    order = sum(lengths)
    edges = []
    start = 0
    for length in lengths:
        edges.extend((start + i, start + (i + 1) % length) for i in range(length))
        start += length
    return Graph.from_edges(order, edges).complement()


def extremal_even_family(n: int) -> list[Graph]:
    """All (n-4)-DVDR graphs on n vertices, one per isomorphism class.

    An (n-4)-regular graph on n - 1 vertices has a 2-regular complement, i.e. a disjoint
    union of cycles, so the classes are indexed by partitions of n - 1 into parts >= 3.

    Raises:
        FamilyError: If n is odd or below 4
    """
    if n < 4 or n % 2:
        raise FamilyError(f"Even extremal family needs even n >= 4, got {n}")
    return [dvdr_join(regular_complement_of_cycles(p)) for p in cycle_partitions(n - 1)]
