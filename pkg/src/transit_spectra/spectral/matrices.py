"""Build D(G) and Q(G) = D(G) + diag(D_1, ..., D_n) as symmetric matrices."""

from dataclasses import dataclass

import numpy as np

from transit_spectra.core.graph import (
    DistanceMatrix,
    Graph,
    TransmissionProfile,
    distance_matrix,
    transmission_profile,
)
from transit_spectra.core.validate import GraphError


@dataclass(frozen=True, slots=True)
class SymmetricMatrix:
    """Dense real symmetric matrix; symmetry is exact by construction.

    Only the upper triangle of the source array is read; the lower triangle is its mirror.
    """

    values: np.ndarray
    integral: bool

    @classmethod
    def from_upper(cls, source: np.ndarray | list[list[float]]) -> "SymmetricMatrix":
        """Mirror the upper triangle of a square array.

        Raises:
            GraphError: If the array is not square
        """
        a = np.asarray(source, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError(f"Expected a square matrix, got shape {a.shape}")
        upper = np.triu(a)
        values = upper + np.triu(upper, 1).T
        values.setflags(write=False)
        return cls(values=values, integral=bool(np.all(values == np.round(values))))

    @property
    def order(self) -> int:
        return self.values.shape[0]

    @property
    def inf_norm(self) -> float:
        """Maximum absolute row sum."""
        return float(np.abs(self.values).sum(axis=1).max())


def distance_symmetric_matrix(d: DistanceMatrix) -> SymmetricMatrix:
    """D(G) as a real symmetric matrix."""
    return SymmetricMatrix.from_upper(d.entries)


def dsl_symmetric_matrix(d: DistanceMatrix, profile: TransmissionProfile) -> SymmetricMatrix:
    """Q(G) = D(G) + diag(transmissions)."""
    q = d.entries + np.diag(np.asarray(profile.transmissions, dtype=np.int64))
    return SymmetricMatrix.from_upper(q)


def dsl_matrix(g: Graph) -> SymmetricMatrix:
    """Distance signless Laplacian of a connected graph."""
    d = distance_matrix(g)
    return dsl_symmetric_matrix(d, transmission_profile(d))


def distance_matrix_of(g: Graph) -> SymmetricMatrix:
    """Distance matrix of a connected graph as reals."""
    return distance_symmetric_matrix(distance_matrix(g))
