"""Test the closed-form bound sequences."""

import math

import pytest

from transit_spectra.core.bounds import (
    bound_values,
    cocktail_apex_dsl_radius,
    connected_tau_bound,
    dvdr_even_dsl_radius,
    residuals,
    sequence_trends,
    star_distance_radius,
    star_sigma,
    star_tau,
)
from transit_spectra.core.families import extremal_even_family, star
from transit_spectra.core.validate import UnsupportedOrderError
from transit_spectra.spectral.irregularity import distance_spectral_radius, dsl_spectral_radius


@pytest.mark.parametrize(
    "n, tau_n",
    [
        (3, (5 - math.sqrt(17)) / 2),
        (4, 4 - 2 * math.sqrt(3)),
        (5, (7 - math.sqrt(41)) / 2),
        (6, 5 - math.sqrt(21)),
        (7, (9 - math.sqrt(73)) / 2),
        (8, 6 - 4 * math.sqrt(2)),
    ],
)
def test_tau_n_values(n, tau_n):
    assert bound_values(n).tau_n == pytest.approx(tau_n, abs=1e-12)
    assert connected_tau_bound(n) == pytest.approx(tau_n, abs=1e-12)


def test_known_decimal_values():
    assert bound_values(5).tau_n == pytest.approx(0.29843788, abs=1e-8)
    assert bound_values(7).tau_n == pytest.approx(0.22800647, abs=1e-8)
    assert bound_values(6).tau_n == pytest.approx(0.41742430, abs=1e-8)
    assert bound_values(8).tau_n == pytest.approx(0.34314575, abs=1e-8)
    assert bound_values(4).sigma_tree == pytest.approx(0.354249, abs=1e-6)
    assert bound_values(4).tau_tree == pytest.approx(0.535898, abs=1e-6)
    assert bound_values(5).sigma_tree == pytest.approx(4 - math.sqrt(13), abs=1e-12)


def test_gamma_and_eta():
    assert (bound_values(5).gamma, bound_values(6).gamma) == (1, 2)
    assert bound_values(9).eta == 7


def test_residuals_vanish():
    """The three defining quadratics vanish at the bounds for 3 <= n <= 1000."""
    for n in range(3, 1001):
        r = residuals(bound_values(n))
        for name in ("tau_n", "sigma_tree", "tau_tree"):
            assert abs(getattr(r, name)) <= 1e-10, f"{name} residual at n={n}"


def test_large_orders_stable():
    """Stable evaluation keeps full relative precision at n = 10^6."""
    b = bound_values(10**6)
    assert 0 < b.tau_n < 1e-5
    assert b.tau_n == pytest.approx(4 / (10**6 + 4), rel=1e-6)


def test_order_below_three():
    with pytest.raises(UnsupportedOrderError):
        bound_values(2)


def test_tree_bounds_equal_star_measures():
    for n in range(3, 12):
        b = bound_values(n)
        assert b.sigma_tree == pytest.approx(star_sigma(n), abs=1e-12)
        assert b.tau_tree == pytest.approx(star_tau(n), abs=1e-12)


def test_star_distance_radius():
    for n in (3, 6, 10):
        assert distance_spectral_radius(star(n)).radius == pytest.approx(
            star_distance_radius(n), abs=1e-10
        )


def test_dvdr_even_radius_matches_family():
    """Every (n-4)-DVDR graph has the same Q-radius (3n + sqrt(n^2 + 8n)) / 2."""
    for n in (6, 8, 10):
        for g in extremal_even_family(n):
            assert dsl_spectral_radius(g).radius == pytest.approx(
                dvdr_even_dsl_radius(n), abs=1e-10
            )


def test_cocktail_radius_consistent_with_bound():
    for n in range(3, 40, 2):
        assert 2 * n - cocktail_apex_dsl_radius(n) == pytest.approx(
            bound_values(n).tau_n, abs=1e-12
        )


def test_sequence_trends():
    trends = sequence_trends(200)

    assert trends.tau_odd_decreasing
    assert trends.tau_even_decreasing
    assert not trends.tau_interleaved_monotone, "tau_5 < tau_6 breaks interleaved monotonicity"
    assert trends.sigma_tree_increasing
    assert trends.tau_tree_increasing
    assert trends.sigma_tree_last < trends.sigma_tree_limit == 0.5
    assert trends.tau_tree_last < trends.tau_tree_limit == pytest.approx(2 / 3)
    assert trends.tau_odd_last < 0.02


def test_sequence_trends_needs_six():
    with pytest.raises(UnsupportedOrderError):
        sequence_trends(5)
