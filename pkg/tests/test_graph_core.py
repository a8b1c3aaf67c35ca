"""Test graph representation, distances and transmission profiles."""

import networkx as nx
import numpy as np
import pydantic
import pytest

from transit_spectra.core.families import complete, cycle, complete_multipartite, path, star
from transit_spectra.core.graph import (
    Graph,
    bfs_distances,
    distance_matrix,
    from_networkx,
    is_connected,
    is_transmission_regular,
    to_networkx,
    transmission_profile,
)
from transit_spectra.core.validate import (
    GraphError,
    NotConnectedError,
    UnsupportedOrderError,
    ValidationError,
    validate_distance_matrix,
    validate_profile,
)
from transit_spectra.enumeration.graphs import connected_graphs


@pytest.fixture
def p4():
    """Path 0-1-2-3."""
    return path(4)


def test_path_transmissions(p4):
    """End vertices have transmission 6, middle vertices 4."""
    profile = transmission_profile(distance_matrix(p4))

    assert profile.transmissions == (6, 4, 4, 6)
    assert profile.wiener == 10
    assert profile.dmax == 6 and profile.dmin == 4
    assert profile.gap == 4, f"n*D_max - 2W should be 4, got {profile.gap}"
    assert profile.argmax == (0, 3)


def test_distance_matrix_entries(p4):
    """Hop counts along a path are index differences."""
    d = distance_matrix(p4)
    expected = np.abs(np.subtract.outer(np.arange(4), np.arange(4)))
    assert np.array_equal(d.entries, expected)
    assert d.row(0) == (0, 1, 2, 3)


def test_distance_matrix_read_only(p4):
    d = distance_matrix(p4)
    with pytest.raises(ValueError):
        d.entries[0, 1] = 5


def test_disconnected_graph_rejected():
    """Two disjoint edges have no distance matrix."""
    g = Graph.from_edges(4, [(0, 1), (2, 3)])

    assert not is_connected(g)
    with pytest.raises(NotConnectedError):
        distance_matrix(g)


def test_bfs_marks_unreachable():
    g = Graph.from_edges(3, [(0, 1)])
    assert bfs_distances(g, 0) == [0, 1, -1]


@pytest.mark.parametrize(
    "g, transmission",
    [
        (complete(3), 2),
        (complete(4), 3),
        (cycle(4), 4),
        (cycle(5), 6),
    ],
)
def test_transmission_regular_graphs(g, transmission):
    """Vertex-transitive graphs have a single transmission value and zero gap."""
    profile = transmission_profile(distance_matrix(g))

    assert set(profile.transmissions) == {transmission}
    assert is_transmission_regular(profile)
    assert profile.gap == 0


def test_star_profile():
    """K_(1,3): centre at distance 1 from all, leaves at 1 + 2 + 2."""
    profile = transmission_profile(distance_matrix(star(4)))

    assert profile.transmissions == (3, 5, 5, 5)
    assert not is_transmission_regular(profile)


def test_cocktail_apex_profile():
    """K_(1,2,2): apex 4, every other vertex 5, gap 1."""
    profile = transmission_profile(distance_matrix(complete_multipartite((1, 2, 2))))

    assert profile.transmissions == (4, 5, 5, 5, 5)
    assert profile.gap == 1


def test_single_vertex():
    g = Graph.empty(1)
    profile = transmission_profile(distance_matrix(g))

    assert profile.transmissions == (0,)
    assert profile.wiener == 0
    assert is_transmission_regular(profile)


def test_invalid_adjacency_rejected():
    """Asymmetric rows, self-loops and out-of-range bits are all structural errors."""
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0b000))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_order_limits():
    with pytest.raises(UnsupportedOrderError):
        Graph.empty(0)
    with pytest.raises(UnsupportedOrderError):
        Graph.empty(65)


def test_edges_and_degrees(p4):
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert p4.degrees() == (1, 2, 2, 1)
    assert p4.edge_count == 3
    assert p4.regular_degree() is None
    assert cycle(5).regular_degree() == 2


def test_relabel(p4):
    """Renaming 0->2, 1->0, 2->3, 3->1 gives the path 2-0-3-1."""
    g = p4.relabel([2, 0, 3, 1])

    assert g.edges() == [(0, 2), (0, 3), (1, 3)]
    with pytest.raises(GraphError):
        p4.relabel([0, 0, 1, 2])


def test_delete_and_add_vertex(p4):
    """Deleting an end vertex of P4 leaves P3; appending a vertex extends it again."""
    p3 = p4.delete_vertex(0)
    assert p3.edges() == [(0, 1), (1, 2)]

    extended = p3.add_vertex(0b100)
    assert extended == path(4)
    with pytest.raises(GraphError):
        p3.add_vertex(0b1000)


def test_complement():
    assert cycle(4).complement().edges() == [(0, 2), (1, 3)]
    assert complete(4).complement().edge_count == 0


def test_validate_distance_matrix(p4):
    validate_distance_matrix(distance_matrix(p4))


def test_validate_profile(p4):
    validate_profile(transmission_profile(distance_matrix(p4)))


def test_profile_is_a_frozen_record(p4):
    profile = transmission_profile(distance_matrix(p4))

    assert profile.model_dump() == {
        "transmissions": (6, 4, 4, 6),
        "dmax": 6,
        "dmin": 4,
        "wiener": 10,
        "gap": 4,
        "argmax": (0, 3),
    }
    assert profile.order == 4
    with pytest.raises(pydantic.ValidationError):
        profile.gap = 0


def test_validate_profile_detects_inconsistency(p4):
    profile = transmission_profile(distance_matrix(p4))
    broken = type(profile)(
        transmissions=profile.transmissions,
        dmax=profile.dmax,
        dmin=profile.dmin,
        wiener=profile.wiener + 1,
        gap=profile.gap,
        argmax=profile.argmax,
    )
    with pytest.raises(ValidationError):
        validate_profile(broken)


def check_population_invariants(n: int) -> None:
    for g in connected_graphs(n):
        d = distance_matrix(g)
        validate_distance_matrix(d)
        profile = transmission_profile(d)
        validate_profile(profile)
        assert profile.gap >= 0
        assert profile.gap == sum(profile.dmax - t for t in profile.transmissions)


@pytest.mark.parametrize("n", range(1, 8))
def test_distance_invariants_over_connected_graphs(n):
    """gap = sum(D_max - D_i) = n*D_max - 2W on every connected graph of order n."""
    check_population_invariants(n)


@pytest.mark.slow
def test_distance_invariants_order_8():
    check_population_invariants(8)


@pytest.mark.parametrize("n", [5, 6])
def test_wiener_index_matches_networkx(n):
    for g in connected_graphs(n):
        profile = transmission_profile(distance_matrix(g))
        assert profile.wiener == nx.wiener_index(to_networkx(g))


def test_networkx_conversion(p4):
    h = to_networkx(p4)

    assert list(h.nodes) == [0, 1, 2, 3]
    assert sorted(h.edges) == p4.edges()
    assert from_networkx(h) == p4
    assert from_networkx(nx.relabel_nodes(h, {0: "a", 1: "b", 2: "c", 3: "d"})) == p4
