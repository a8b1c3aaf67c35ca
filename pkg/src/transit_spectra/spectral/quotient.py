"""Equitable partitions and their quotient matrices."""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from transit_spectra.core.constants import EQUITABLE_TOLERANCE
from transit_spectra.core.validate import DomainError, GraphError, NotEquitableError
from transit_spectra.spectral.matrices import SymmetricMatrix


@dataclass(frozen=True, slots=True)
class QuotientMatrix:
    """Block row sums b_ij of a matrix under an equitable partition."""

    entries: np.ndarray
    partition: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    def spectral_radius(self) -> float:
        """Largest real eigenvalue (the quotient is not symmetric in general)."""
        return float(np.linalg.eigvals(self.entries).real.max())


def _normalize_partition(
    order: int, partition: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], ...]:
    blocks = tuple(tuple(sorted(block)) for block in partition)
    if any(not block for block in blocks):
        raise GraphError("Partition has an empty block")
    flat = [v for block in blocks for v in block]
    if sorted(flat) != list(range(order)):
        raise GraphError(f"Partition does not cover 0..{order - 1} disjointly")
    return blocks


def check_equitable(
    m: SymmetricMatrix,
    partition: Sequence[Sequence[int]],
    tol: float = EQUITABLE_TOLERANCE,
) -> QuotientMatrix:
    """Verify constant block row sums and return the quotient matrix.

    Integral matrices are checked by exact integer equality, others within ``tol``.

    Raises:
        GraphError: If the partition is not a partition of the index set
        NotEquitableError: Identifying the first block with non-constant row sums
    """
    blocks = _normalize_partition(m.order, partition)
    k = len(blocks)

    if m.integral:
        source = np.rint(m.values).astype(np.int64)
    else:
        source = m.values

    b = np.zeros((k, k), dtype=np.float64)
    for i, rows in enumerate(blocks):
        for j, cols in enumerate(blocks):
            sums = source[np.ix_(rows, cols)].sum(axis=1)
            if m.integral:
                constant = bool(np.all(sums == sums[0]))
            else:
                constant = float(sums.max() - sums.min()) <= tol
            if not constant:
                raise NotEquitableError((i, j), rows, tuple(sums.tolist()))
            b[i, j] = float(sums[0])

    b.setflags(write=False)
    return QuotientMatrix(entries=b, partition=blocks)


def apex_quotient(m: SymmetricMatrix, apex: int = 0) -> QuotientMatrix:
    """Quotient under the partition {apex} and the rest."""
    rest = tuple(v for v in range(m.order) if v != apex)
    return check_equitable(m, [(apex,), rest])


def quotient_radius_2x2(b: QuotientMatrix) -> float:
    """Largest root (b11 + b22 + sqrt((b11 - b22)^2 + 4 b12 b21)) / 2.

    Raises:
        DomainError: If the quotient is not 2x2
    """
    if b.k != 2:
        raise DomainError(f"Closed form needs a 2x2 quotient, got {b.k}x{b.k}")
    (b11, b12), (b21, b22) = b.entries.tolist()
    return (b11 + b22 + math.sqrt((b11 - b22) ** 2 + 4.0 * b12 * b21)) / 2.0
