"""Distance spectral radii and the irregularity measures sigma and tau."""

from transit_spectra.core.constants import MEASURE_SIGMA, PERRON_TOLERANCE, Measure
from transit_spectra.core.graph import (
    Graph,
    TransmissionProfile,
    distance_matrix,
    is_transmission_regular,
    transmission_profile,
)
from transit_spectra.core.schemas import IrregularityReport
from transit_spectra.core.validate import UnsupportedOrderError
from transit_spectra.spectral.matrices import (
    distance_matrix_of,
    distance_symmetric_matrix,
    dsl_matrix,
    dsl_symmetric_matrix,
)
from transit_spectra.spectral.perron import PerronResult, perron


def distance_spectral_radius(g: Graph, tol: float = PERRON_TOLERANCE) -> PerronResult:
    """Perron data of D(G).

    Raises:
        UnsupportedOrderError: For a single vertex
        NotConnectedError: For a disconnected graph
    """
    if g.order < 2:
        raise UnsupportedOrderError("Distance spectral radius needs at least 2 vertices")
    return perron(distance_matrix_of(g), tol)


def dsl_spectral_radius(g: Graph, tol: float = PERRON_TOLERANCE) -> PerronResult:
    """Perron data of Q(G)."""
    if g.order < 2:
        raise UnsupportedOrderError("Distance signless Laplacian radius needs at least 2 vertices")
    return perron(dsl_matrix(g), tol)


def irregularity(g: Graph, tol: float = PERRON_TOLERANCE) -> IrregularityReport:
    """sigma(G) and tau(G) with the radii they come from.

    Transmission-regular graphs have radius(D) = D_max and radius(Q) = 2 D_max exactly, so
    both measures are reported as exact zeros there.
    """
    d = distance_matrix(g)
    profile = transmission_profile(d)

    if is_transmission_regular(profile):
        return IrregularityReport(
            sigma=0.0,
            tau=0.0,
            dmax=profile.dmax,
            dmin=profile.dmin,
            distance_radius=float(profile.dmax),
            dsl_radius=float(2 * profile.dmax),
        )

    distance_radius = perron(distance_symmetric_matrix(d), tol).radius
    dsl_radius = perron(dsl_symmetric_matrix(d, profile), tol).radius
    return IrregularityReport(
        sigma=profile.dmax - distance_radius,
        tau=2 * profile.dmax - dsl_radius,
        dmax=profile.dmax,
        dmin=profile.dmin,
        distance_radius=distance_radius,
        dsl_radius=dsl_radius,
    )


def measure_value(
    g: Graph, measure: Measure, tol: float = PERRON_TOLERANCE
) -> tuple[TransmissionProfile, float | None]:
    """Profile and a single measure; the measure is None on transmission-regular graphs."""
    d = distance_matrix(g)
    profile = transmission_profile(d)
    if is_transmission_regular(profile):
        return profile, None
    if measure == MEASURE_SIGMA:
        return profile, profile.dmax - perron(distance_symmetric_matrix(d), tol).radius
    return profile, 2 * profile.dmax - perron(dsl_symmetric_matrix(d, profile), tol).radius
