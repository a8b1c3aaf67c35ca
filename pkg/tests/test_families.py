"""Test family constructors and the DVDR recognizer."""

import pytest

from transit_spectra.core.families import (
    cocktail_apex,
    complete,
    complete_multipartite,
    cycle,
    cycle_partitions,
    dvdr_join,
    extremal_even_family,
    is_dvdr,
    path,
    regular_complement_of_cycles,
    star,
    wheel,
)
from transit_spectra.core.graph import Graph, distance_matrix, transmission_profile
from transit_spectra.core.validate import FamilyError, NotRegularError
from transit_spectra.enumeration.canonical import canonical_form
from transit_spectra.enumeration.graphs import connected_graphs


def test_star_centre_is_zero():
    g = star(5)
    assert g.degrees() == (4, 1, 1, 1, 1)
    with pytest.raises(FamilyError):
        star(1)


def test_complete_multipartite():
    assert complete_multipartite((1, 1, 1)) == complete(3)
    assert complete_multipartite((1, 3)) == star(4)
    assert complete_multipartite((2, 3)).edge_count == 6
    with pytest.raises(FamilyError):
        complete_multipartite(())
    with pytest.raises(FamilyError):
        complete_multipartite((1, 0))


def test_cocktail_apex():
    """K_(1,2,2) has transmissions [4,5,5,5,5]; n = 3 degenerates to P3."""
    g = cocktail_apex(5)
    assert transmission_profile(distance_matrix(g)).transmissions == (4, 5, 5, 5, 5)
    assert canonical_form(cocktail_apex(3)) == canonical_form(path(3))
    assert transmission_profile(distance_matrix(cocktail_apex(7))).dmax == 7
    with pytest.raises(FamilyError):
        cocktail_apex(6)


def test_dvdr_join():
    """C5 gives the wheel; the empty graph on 3 vertices gives K_(1,3); C4 gives K_(1,2,2)."""
    assert dvdr_join(cycle(5)) == wheel(6)
    assert dvdr_join(Graph.empty(3)) == star(4)
    assert canonical_form(dvdr_join(cycle(4))) == canonical_form(cocktail_apex(5))
    with pytest.raises(NotRegularError):
        dvdr_join(path(4))


def test_dvdr_join_transmissions():
    """Apex has D = n - 1, every other vertex D = 2n - 3 - r."""
    h = regular_complement_of_cycles((3, 4))
    g = dvdr_join(h)
    n, r = g.order, h.regular_degree()
    t = transmission_profile(distance_matrix(g)).transmissions

    assert t[0] == n - 1
    assert set(t[1:]) == {2 * n - 3 - r}


@pytest.mark.parametrize(
    "g, vertex, regularity",
    [
        (wheel(6), 0, 2),
        (cocktail_apex(5), 0, 2),
        (cocktail_apex(7), 0, 4),
        (star(4), 0, 0),
        (complete(5), 0, 3),
        (complete(3), 0, 1),
    ],
)
def test_is_dvdr(g, vertex, regularity):
    witness = is_dvdr(g)
    assert witness is not None
    assert (witness.vertex, witness.regularity) == (vertex, regularity)
    assert witness.apex_degree == g.order - 1


def test_is_dvdr_negative():
    assert is_dvdr(path(4)) is None
    assert is_dvdr(cycle(5)) is None


def test_is_dvdr_smallest_apex():
    """Relabeling so the apex is not vertex 0 still finds it."""
    g = wheel(6).relabel([3, 0, 1, 2, 4, 5])
    assert is_dvdr(g).vertex == 3


def test_is_dvdr_roundtrip_regular_graphs():
    """is_dvdr(dvdr_join(h)) reports the regularity h was built with."""
    for h in [Graph.empty(4), cycle(6), complete(4), regular_complement_of_cycles((3, 3))]:
        assert is_dvdr(dvdr_join(h)).regularity == h.regular_degree()


def test_cycle_partitions():
    assert list(cycle_partitions(7)) == [(3, 4), (7,)]
    assert list(cycle_partitions(5)) == [(5,)]
    assert list(cycle_partitions(9)) == [(3, 3, 3), (3, 6), (4, 5), (9,)]


@pytest.mark.parametrize("n, count", [(4, 1), (6, 1), (8, 2), (10, 4), (12, 6)])
def test_extremal_even_family_sizes(n, count):
    family = extremal_even_family(n)

    assert len(family) == count
    assert len({canonical_form(g) for g in family}) == count, "members must be non-isomorphic"
    for g in family:
        assert g.order == n
        assert is_dvdr(g).regularity == n - 4
        assert transmission_profile(distance_matrix(g)).dmax == n + 1


def test_extremal_even_small_cases():
    assert extremal_even_family(4) == [star(4)]
    assert canonical_form(extremal_even_family(6)[0]) == canonical_form(wheel(6))
    with pytest.raises(FamilyError):
        extremal_even_family(7)


@pytest.mark.parametrize("n", [4, 6, pytest.param(8, marks=pytest.mark.slow)])
def test_extremal_even_family_is_complete(n):
    """Every (n-4)-DVDR connected graph on n vertices appears in the family."""
    expected = {canonical_form(g) for g in extremal_even_family(n)}
    found = set()
    for g in connected_graphs(n):
        witness = is_dvdr(g)
        if witness is not None and witness.regularity == n - 4:
            found.add(canonical_form(g))
    assert found == expected
