"""Error types and invariant validation beyond Pydantic schemas."""

from enum import Enum
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from transit_spectra.core.graph import DistanceMatrix, TransmissionProfile
    from transit_spectra.spectral.perron import PerronResult


class TransitSpectraError(Exception):
    """Base class for all package errors."""


class ValidationError(TransitSpectraError):
    """Raised when a computed object violates one of its invariants."""


class GraphError(TransitSpectraError):
    """Raised for structurally invalid graph input."""


class NotConnectedError(GraphError):
    """Raised when an operation needs a connected graph."""


class NotATreeError(GraphError):
    """Raised when an operation needs a tree."""


class NotRegularError(GraphError):
    """Raised when an operation needs a regular graph."""


class UnsupportedOrderError(GraphError):
    """Raised when a graph order is outside an operation's cap."""


class FamilyError(TransitSpectraError):
    """Raised for invalid family constructor parameters."""


class Graph6ErrorKind(str, Enum):
    """Distinguishes the ways a graph6 line can be malformed."""

    EMPTY = "empty"
    BAD_HEADER = "bad-header"
    BAD_CHARACTER = "bad-character"
    BAD_LENGTH = "bad-length"
    TRAILING_DATA = "trailing-data"
    PADDING = "padding"


class Graph6ParseError(TransitSpectraError):
    """Raised when a graph6 line cannot be decoded."""

    def __init__(self, kind: Graph6ErrorKind, message: str):
        super().__init__(f"{kind.value}: {message}")
        self.kind = kind


class Graph6StreamError(TransitSpectraError):
    """Raised when a line of a graph6 stream is rejected under the abort policy."""

    def __init__(self, line_number: int, cause: Exception):
        super().__init__(f"line {line_number}: {cause}")
        self.line_number = line_number
        self.cause = cause


class DomainError(TransitSpectraError):
    """Raised when a matrix lies outside the Perron-Frobenius domain."""


class ConvergenceError(TransitSpectraError):
    """Raised when the power method hits its iteration cap."""

    def __init__(self, message: str, best_residual: float, iterations: int):
        super().__init__(f"{message} (best residual {best_residual:.3e} after {iterations} sweeps)")
        self.best_residual = best_residual
        self.iterations = iterations


class NotEquitableError(TransitSpectraError):
    """Raised when a partition does not have constant block row sums."""

    def __init__(self, block: tuple[int, int], rows: tuple[int, ...], sums: tuple[float, ...]):
        super().__init__(
            f"block {block} has non-constant row sums {sums} on rows {rows}"
        )
        self.block = block
        self.rows = rows
        self.sums = sums


class PopulationError(TransitSpectraError):
    """Raised when a graph population cannot be aggregated."""


def validate_distance_matrix(d: "DistanceMatrix") -> None:
    """Check symmetry, zero diagonal, positive off-diagonal and the triangle inequality.

    Args:
        d: Distance matrix of a connected graph

    Raises:
        ValidationError: If any invariant is violated
    """
    m = d.entries
    n = d.order

    if m.shape != (n, n):
        raise ValidationError(f"Distance matrix shape {m.shape} does not match order {n}")

    if not np.array_equal(m, m.T):
        raise ValidationError("Distance matrix is not symmetric")

    if np.any(np.diag(m) != 0):
        raise ValidationError("Distance matrix has a nonzero diagonal entry")

    off_diagonal = m[~np.eye(n, dtype=bool)]
    if np.any(off_diagonal < 1):
        raise ValidationError("Distance matrix has an off-diagonal entry below 1")

    # d[i, k] <= d[i, j] + d[j, k] for every j
    detour = (m[:, :, None] + m[None, :, :]).min(axis=1)
    if np.any(m > detour):
        raise ValidationError("Distance matrix violates the triangle inequality")


def validate_profile(p: "TransmissionProfile") -> None:
    """Check the transmission profile identities.

    Raises:
        ValidationError: If any identity fails
    """
    transmissions = p.transmissions
    n = len(transmissions)

    if 2 * p.wiener != sum(transmissions):
        raise ValidationError(f"2W = {2 * p.wiener} differs from sum of transmissions")

    if p.gap != sum(p.dmax - t for t in transmissions):
        raise ValidationError(f"Gap {p.gap} differs from sum of (D_max - D_i)")

    if p.gap != n * p.dmax - 2 * p.wiener:
        raise ValidationError(f"Gap {p.gap} differs from n*D_max - 2W")

    if p.gap < 0:
        raise ValidationError(f"Negative gap {p.gap}")

    if (p.gap == 0) != (p.dmax == p.dmin):
        raise ValidationError("Gap vanishes without D_max = D_min (or vice versa)")


def validate_perron_result(result: "PerronResult", matrix: np.ndarray, tol: float) -> None:
    """Check positivity, normalization and residual of a Perron eigenpair.

    Args:
        result: Eigenpair returned by the power method
        matrix: Dense matrix the eigenpair belongs to
        tol: Relative residual tolerance

    Raises:
        ValidationError: If the eigenpair is not an acceptable Perron pair
    """
    x = result.vector

    if np.any(x <= 0):
        raise ValidationError("Perron vector has a non-positive entry")

    if abs(float(np.linalg.norm(x)) - 1.0) > 1e-12:
        raise ValidationError("Perron vector is not normalized")

    scale = max(1.0, float(np.abs(matrix).sum(axis=1).max()))
    # rounding of the recomputed residual
    slack = 8 * len(x) * float(np.finfo(float).eps) * scale
    residual = float(np.abs(matrix @ x - result.radius * x).max())
    if residual > tol * scale + slack:
        raise ValidationError(f"Perron residual {residual:.3e} exceeds {tol * scale:.3e}")
