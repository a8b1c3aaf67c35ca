"""Perron root and vector of nonnegative irreducible symmetric matrices."""

from dataclasses import dataclass

import numpy as np

from transit_spectra.core.constants import PERRON_TOLERANCE, perron_iteration_cap
from transit_spectra.core.validate import ConvergenceError, DomainError, validate_perron_result
from transit_spectra.spectral.matrices import SymmetricMatrix


@dataclass(frozen=True, slots=True)
class PerronResult:
    """Largest eigenvalue with its positive unit eigenvector.

    ``residual`` is the infinity norm of ``M x - radius x`` for the returned vector.
    """

    radius: float
    vector: np.ndarray
    residual: float
    iterations: int

    @property
    def x_max(self) -> float:
        return float(self.vector.max())

    @property
    def x_min(self) -> float:
        return float(self.vector.min())

    @property
    def ratio(self) -> float:
        """x_max / x_min."""
        return self.x_max / self.x_min


def _is_irreducible(a: np.ndarray) -> bool:
    pattern = a > 0
    n = a.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = pattern[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def perron(
    m: SymmetricMatrix, tol: float = PERRON_TOLERANCE, max_iter: int | None = None
) -> PerronResult:
    """Power iteration on M + I from the normalized all-ones vector.

    The unit shift makes the matrix primitive, so period-2 patterns such as D(K_2) converge.
    Each sweep takes the Rayleigh quotient as the radius estimate and stops once
    ``||M x - radius x||_inf <= tol * max(1, ||M||_inf)``.

    Args:
        m: Nonnegative irreducible symmetric matrix
        tol: Relative residual tolerance
        max_iter: Sweep cap (default 200*n + 10000)

    Returns:
        PerronResult with radius reported as (shifted radius) - 1

    Raises:
        DomainError: On a negative entry or a reducible matrix
        ConvergenceError: If the cap is reached first
        ValidationError: If the converged pair fails the Perron checks
    """
    a = m.values
    n = m.order

    if np.any(a < 0):
        raise DomainError("Perron iteration needs a nonnegative matrix")
    if n > 1 and not _is_irreducible(a):
        raise DomainError("Perron iteration needs an irreducible matrix")

    cap = perron_iteration_cap(n) if max_iter is None else max_iter
    threshold = tol * max(1.0, m.inf_norm)

    x = np.full(n, 1.0 / np.sqrt(n))
    best = np.inf
    for sweep in range(1, cap + 1):
        y = a @ x + x
        shifted = float(x @ y)
        residual = float(np.abs(y - shifted * x).max())
        best = min(best, residual)
        if residual <= threshold:
            result = PerronResult(
                radius=shifted - 1.0, vector=x, residual=residual, iterations=sweep
            )
            validate_perron_result(result, a, tol)
            return result
        x = y / np.linalg.norm(y)

    raise ConvergenceError(f"Power iteration on an order-{n} matrix did not converge", best, cap)


def dense_spectral_radius(m: SymmetricMatrix) -> float:
    """Largest eigenvalue from a full symmetric eigensolve."""
    return float(np.linalg.eigvalsh(m.values)[-1])
