"""Free trees, one per isomorphism class.

Generation is delegated to networkx (Wright-Richmond-Odlyzko-McKay level sequences,
constant amortized time per tree); each tree is converted to a bitset ``Graph``.
"""

from typing import Iterator

import networkx as nx

from transit_spectra.core.constants import TREE_MAX_ORDER
from transit_spectra.core.graph import Graph, from_networkx
from transit_spectra.core.validate import UnsupportedOrderError


def free_trees(n: int) -> Iterator[Graph]:
    """Stream one tree per isomorphism class on n vertices, in a fixed order.

    Raises:
        UnsupportedOrderError: If n is outside 1..18
    """
    if not 1 <= n <= TREE_MAX_ORDER:
        raise UnsupportedOrderError(f"Tree enumeration supports n in 1..{TREE_MAX_ORDER}, got {n}")
    if n == 1:
        yield Graph.empty(1)
        return

    for tree in nx.nonisomorphic_trees(n):
        yield from_networkx(tree)
