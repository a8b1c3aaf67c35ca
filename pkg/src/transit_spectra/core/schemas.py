"""Pydantic schemas for configuration, measures and reports."""

import os
from datetime import datetime
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from transit_spectra.core import constants as C
from transit_spectra.core.constants import ErrorPolicy, GraphClass, Measure, OutputFormat


class Tolerances(BaseModel):
    """Numerical tolerances; every value must be positive."""

    perron: float = Field(default=C.PERRON_TOLERANCE, gt=0, description="Relative Perron residual")
    tie: float = Field(default=C.TIE_TOLERANCE, gt=0, description="Attains-the-minimum tolerance")
    bound: float = Field(default=C.BOUND_TOLERANCE, gt=0, description="Minimum vs closed form")
    structure: float = Field(
        default=C.STRUCTURE_TOLERANCE, gt=0, description="Eigenvector structure checks"
    )
    equitable: float = Field(
        default=C.EQUITABLE_TOLERANCE, gt=0, description="Real block row-sum tolerance"
    )


class RunConfig(BaseModel):
    """Settings for one CLI invocation; loadable from YAML."""

    subcommand: Literal["analyze", "verify", "bounds", "construct", "enumerate"] = "analyze"
    n: Optional[int] = Field(default=None, ge=1, description="Graph order")
    theorem: Literal[1, 2] = 1
    measure: Measure = "tau"
    graph_class: Literal["connected", "trees"] = "connected"
    tolerances: Tolerances = Field(default_factory=Tolerances)
    input_path: Optional[str] = Field(default=None, description="graph6 input, '-' for stdin")
    output_path: Optional[str] = Field(default=None, description="Report destination")
    output_format: OutputFormat = "json"
    jobs: int = Field(
        default_factory=lambda: os.cpu_count() or 1, ge=1, description="Worker processes"
    )
    on_error: ErrorPolicy = "abort"
    allow_order_10: bool = False
    verbose: bool = False

    @model_validator(mode="after")
    def check_order_caps(self) -> "RunConfig":
        """Ensure n lies within the cap of the selected subcommand."""
        if self.n is None:
            return self
        if self.subcommand == "verify":
            if self.theorem == 1:
                lo, hi = C.THEOREM1_MIN_ORDER, C.THEOREM1_MAX_ORDER
            else:
                lo, hi = C.THEOREM2_MIN_ORDER, C.THEOREM2_MAX_ORDER
        elif self.subcommand == "enumerate":
            lo = 1
            if self.graph_class == "trees":
                hi = C.TREE_MAX_ORDER
            elif self.allow_order_10:
                hi = C.CONNECTED_EXTENDED_MAX_ORDER
            else:
                hi = C.CONNECTED_MAX_ORDER
        elif self.subcommand == "bounds":
            lo, hi = C.BOUNDS_MIN_ORDER, C.BOUNDS_MAX_ORDER
        else:
            lo, hi = 1, C.MAX_ORDER
        if not lo <= self.n <= hi:
            raise ValueError(f"n={self.n} outside {lo}..{hi} for {self.subcommand}")
        return self


class DvdrWitness(BaseModel):
    """Distinguished vertex of a DVDR graph and the regularity of G - v.

    ``regularity`` is the r of "r-DVDR" (K_n is (n-2)-regular after deleting v);
    ``apex_degree`` is d(v) = n - 1, which some worked examples quote as r instead.
    """

    vertex: int = Field(..., ge=0)
    regularity: int = Field(..., ge=0, description="Common degree of G - v")
    apex_degree: int = Field(..., ge=0, description="Degree of v, always n - 1")


class IrregularityReport(BaseModel):
    """sigma = D_max - radius(D) and tau = 2*D_max - radius(Q)."""

    sigma: float
    tau: float
    dmax: int
    dmin: int
    distance_radius: float
    dsl_radius: float

    @model_validator(mode="after")
    def check_nonnegative(self) -> "IrregularityReport":
        if self.sigma < 0 or self.tau < 0:
            raise ValueError(f"Negative irregularity (sigma={self.sigma}, tau={self.tau})")
        return self


class BoundValues(BaseModel):
    """Closed-form bound sequences at order n."""

    n: int = Field(..., ge=C.BOUNDS_MIN_ORDER)
    gamma: int = Field(..., ge=1, le=2)
    eta: int = Field(..., ge=1)
    tau_n: float = Field(..., gt=0)
    sigma_tree: float = Field(..., gt=0)
    tau_tree: float = Field(..., gt=0)

    @field_validator("tau_n")
    @classmethod
    def tau_below_one(cls, v: float) -> float:
        """The ratio 1/(1 - tau_n) must be positive."""
        if v >= 1:
            raise ValueError(f"tau_n = {v} is not below 1")
        return v


class BoundResiduals(BaseModel):
    """Residuals of the three defining quadratics."""

    tau_n: float
    sigma_tree: float
    tau_tree: float


class TrendReport(BaseModel):
    """Monotonicity and limits of the bound sequences over 3..n_max."""

    n_max: int
    tau_odd_decreasing: bool
    tau_even_decreasing: bool
    tau_interleaved_monotone: bool
    sigma_tree_increasing: bool
    tau_tree_increasing: bool
    tau_odd_last: float
    tau_even_last: float
    sigma_tree_last: float
    tau_tree_last: float
    tau_limit: float = 0.0
    sigma_tree_limit: float = 0.5
    tau_tree_limit: float = 2.0 / 3.0


class CheckResult(BaseModel):
    """Outcome of one named check."""

    passed: bool
    detail: str = ""
    asserted: bool = Field(default=True, description="False for informational checks")


class Witness(BaseModel):
    """A population member attaining the minimum."""

    graph6: str
    canonical: str
    value: float


class VerificationReport(BaseModel):
    """Certified minimum of a measure over a graph population."""

    order: int
    graph_class: GraphClass
    measure: Measure
    population: int = Field(..., ge=0)
    non_transmission_regular: int = Field(..., ge=0)
    minimum: Optional[float] = None
    bound: Optional[float] = None
    gap_to_bound: Optional[float] = None
    witnesses: list[Witness] = Field(default_factory=list)
    runner_up: Optional[float] = None
    margin: Optional[float] = None
    checks: dict[str, CheckResult] = Field(default_factory=dict)
    failures: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    passed: bool = False
    # left unset: repeated runs must render byte-identical reports
    created_at: Optional[datetime] = None


class GraphAnalysis(BaseModel):
    """Per-graph record emitted by ``analyze``."""

    graph6: str
    n: int = Field(..., ge=1)
    transmissions: list[int]
    wiener: int = Field(..., ge=0)
    gap: int = Field(..., ge=0)
    dmax: int
    dmin: int
    distance_radius: float
    dsl_radius: float
    sigma: float
    tau: float
    transmission_regular: bool
    dvdr: Optional[DvdrWitness] = Field(
        None, description="regularity is the degree of G - v, not of v"
    )
