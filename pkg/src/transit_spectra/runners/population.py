"""graph6 output of generated populations, optionally in parallel."""

from multiprocessing import Pool
from typing import Iterator

from transit_spectra.core.constants import GraphClass
from transit_spectra.core.graph6 import to_graph6
from transit_spectra.enumeration.canonical import canonical_form
from transit_spectra.enumeration.graphs import connected_graphs
from transit_spectra.enumeration.trees import free_trees


def _branch_lines(task: tuple[int, int, int, bool]) -> list[tuple[bytes, str]]:
    n, branch, branches, allow_order_10 = task
    return [
        (canonical_form(g).bits, to_graph6(g))
        for g in connected_graphs(
            n, branch=branch, branches=branches, allow_order_10=allow_order_10
        )
    ]


def population_graph6(
    graph_class: GraphClass,
    n: int,
    jobs: int = 1,
    allow_order_10: bool = False,
) -> Iterator[str]:
    """graph6 lines of every connected graph or free tree on n vertices.

    A single job streams in generation order; several jobs split connected graphs by
    augmentation branch and the merged lines are sorted by canonical form.
    """
    if graph_class == "trees":
        for t in free_trees(n):
            yield to_graph6(t)
        return

    if jobs <= 1:
        for g in connected_graphs(n, allow_order_10=allow_order_10):
            yield to_graph6(g)
        return

    tasks = [(n, b, jobs, allow_order_10) for b in range(jobs)]
    with Pool(processes=jobs) as pool:
        parts = pool.map(_branch_lines, tasks)
    for _, line in sorted(entry for part in parts for entry in part):
        yield line
