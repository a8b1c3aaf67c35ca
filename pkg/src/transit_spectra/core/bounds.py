"""Closed-form bound sequences and their defining quadratics.

Each bound is the smaller root of t^2 - b t + c = 0:

    tau_n         b = n + 2*gamma_n, c = 2*gamma_n   (gamma_n = 1 odd, 2 even)
    sigma'_n      b = n + eta_n,     c = eta_n       (eta_n = n - 2)
    tau'_n        b = n + 2*eta_n,   c = 2*eta_n

and is evaluated as 2c / (b + sqrt(b^2 - 4c)), which avoids the cancellation in
(b - sqrt(b^2 - 4c)) / 2 at large n.
"""

import math

from transit_spectra.core.constants import (
    BOUNDS_MIN_ORDER,
    RESIDUAL_TOLERANCE,
    TRENDS_MIN_ORDER,
)
from transit_spectra.core.schemas import BoundResiduals, BoundValues, TrendReport
from transit_spectra.core.validate import UnsupportedOrderError, ValidationError


def gamma(n: int) -> int:
    return 1 if n % 2 else 2


def eta(n: int) -> int:
    return n - 2


def _small_root(b: float, c: float) -> float:
    return 2.0 * c / (b + math.sqrt(b * b - 4.0 * c))


def _tau_n(n: int) -> float:
    g = gamma(n)
    return _small_root(n + 2 * g, 2 * g)


def _sigma_tree(n: int) -> float:
    return _small_root(n + eta(n), eta(n))


def _tau_tree(n: int) -> float:
    return _small_root(n + 2 * eta(n), 2 * eta(n))


def connected_tau_bound(n: int) -> float:
    """Lower bound on tau over connected non-transmission-regular graphs, in display form."""
    if n % 2:
        return (n + 2 - math.sqrt(n * n + 4 * n - 4)) / 2
    return (n + 4 - math.sqrt(n * n + 8 * n)) / 2


def star_sigma(n: int) -> float:
    """sigma(K_{1,n-1})."""
    return (2 * n - 2 - math.sqrt(4 * n * n - 12 * n + 12)) / 2


def star_tau(n: int) -> float:
    """tau(K_{1,n-1})."""
    return (3 * n - 4 - math.sqrt(9 * n * n - 32 * n + 32)) / 2


def star_distance_radius(n: int) -> float:
    """Distance spectral radius of K_{1,n-1}: (n - 2) + sqrt(n^2 - 3n + 3)."""
    return (n - 2) + math.sqrt(n * n - 3 * n + 3)


def cocktail_apex_dsl_radius(n: int) -> float:
    """Q-spectral radius of K_{1,2,...,2} on odd n vertices."""
    return (3 * n - 2 + math.sqrt(n * n + 4 * n - 4)) / 2


def dvdr_even_dsl_radius(n: int) -> float:
    """Q-spectral radius of any (n-4)-DVDR graph on n vertices."""
    return (3 * n + math.sqrt(n * n + 8 * n)) / 2


def bound_values(n: int) -> BoundValues:
    """Evaluate gamma_n, eta_n, tau_n, sigma'_n and tau'_n.

    The stable evaluations are cross-checked against the display forms of the bounds to
    1e-12 relative to b.

    Raises:
        UnsupportedOrderError: If n < 3
        ValidationError: If a stable and a display form disagree
    """
    if n < BOUNDS_MIN_ORDER:
        raise UnsupportedOrderError(f"Bounds are defined for n >= {BOUNDS_MIN_ORDER}, got {n}")

    values = BoundValues(
        n=n,
        gamma=gamma(n),
        eta=eta(n),
        tau_n=_tau_n(n),
        sigma_tree=_sigma_tree(n),
        tau_tree=_tau_tree(n),
    )

    for name, stable, display, b in (
        ("tau_n", values.tau_n, connected_tau_bound(n), n + 2 * values.gamma),
        ("sigma_tree", values.sigma_tree, star_sigma(n), n + values.eta),
        ("tau_tree", values.tau_tree, star_tau(n), n + 2 * values.eta),
    ):
        if abs(stable - display) > RESIDUAL_TOLERANCE * max(1.0, b):
            raise ValidationError(f"{name} at n={n}: stable {stable!r} vs display {display!r}")

    return values


def residuals(b: BoundValues) -> BoundResiduals:
    """t^2 - b t + c for each bound; all vanish up to rounding."""

    def quadratic(t: float, linear: int, constant: int) -> float:
        return t * t - linear * t + constant

    return BoundResiduals(
        tau_n=quadratic(b.tau_n, b.n + 2 * b.gamma, 2 * b.gamma),
        sigma_tree=quadratic(b.sigma_tree, b.n + b.eta, b.eta),
        tau_tree=quadratic(b.tau_tree, b.n + 2 * b.eta, 2 * b.eta),
    )


def _strictly(values: list[float], increasing: bool) -> bool:
    pairs = zip(values, values[1:])
    if increasing:
        return all(a < b for a, b in pairs)
    return all(a > b for a, b in pairs)


def sequence_trends(n_max: int) -> TrendReport:
    """Monotonicity of the bound sequences over 3..n_max.

    tau_n decreases along odd n and along even n separately; the interleaved sequence is
    not monotone (tau_5 < tau_6), which the report states explicitly.

    Raises:
        UnsupportedOrderError: If n_max < 6
    """
    if n_max < TRENDS_MIN_ORDER:
        raise UnsupportedOrderError(f"Trends need n_max >= {TRENDS_MIN_ORDER}, got {n_max}")

    orders = range(BOUNDS_MIN_ORDER, n_max + 1)
    tau = {n: _tau_n(n) for n in orders}
    odd = [tau[n] for n in orders if n % 2]
    even = [tau[n] for n in orders if n % 2 == 0]
    sigma_tree = [_sigma_tree(n) for n in orders]
    tau_tree = [_tau_tree(n) for n in orders]

    return TrendReport(
        n_max=n_max,
        tau_odd_decreasing=_strictly(odd, increasing=False),
        tau_even_decreasing=_strictly(even, increasing=False),
        tau_interleaved_monotone=_strictly(list(tau.values()), increasing=False),
        sigma_tree_increasing=_strictly(sigma_tree, increasing=True),
        tau_tree_increasing=_strictly(tau_tree, increasing=True),
        tau_odd_last=odd[-1],
        tau_even_last=even[-1],
        sigma_tree_last=sigma_tree[-1],
        tau_tree_last=tau_tree[-1],
    )
