"""Analytic schemas - front snapshots, velocity profiles and threshold crossings."""

import math
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class SiteValue(BaseModel):
    """log10 C at one site."""

    coordinates: Tuple[int, ...] = Field(description="Chain index k, or lattice (n, m[, p])")
    log10_value: float


class FrontSnapshot(BaseModel):
    """Spatial snapshot of closed-form correlations at one time.

    Sites whose value exceeds 10**clip_log10 are omitted, as are sites
    where the correlation is exactly zero.
    """

    t_over_tau: float = Field(ge=0)
    delta_over_gamma: float = Field(gt=0)
    clip_log10: float = Field(description="Upper cut on retained log10 C")
    sites: List[SiteValue] = Field(default_factory=list)

    @model_validator(mode="after")
    def _clipped(self) -> "FrontSnapshot":
        for site in self.sites:
            if site.log10_value > self.clip_log10:
                raise ValueError(f"site {site.coordinates} above the clip level")
        return self


class VelocityPoint(BaseModel):
    """One direction of a velocity profile; angles in radians."""

    theta: float = Field(description="Azimuthal angle in the fundamental wedge")
    phi: Optional[float] = Field(default=None, description="Polar angle (3D profiles only)")
    velocity: float = Field(gt=0, description="Qubits per unit t/tau")


class VelocityProfile(BaseModel):
    """Lieb-Robinson velocity against direction."""

    dimension: Literal[1, 2, 3]
    delta_over_gamma: float = Field(gt=0)
    axis_velocity: float = Field(gt=0, description="Chain value, the limit along every axis")
    points: List[VelocityPoint] = Field(default_factory=list)

    @model_validator(mode="after")
    def _angles(self) -> "VelocityProfile":
        for p in self.points:
            if self.dimension == 3 and p.phi is None:
                raise ValueError("3D profile points need a polar angle")
            if self.dimension < 3 and p.phi is not None:
                raise ValueError("polar angle given for a planar profile")
        return self


class ThresholdCrossing(BaseModel):
    """Time at which a site's correlation first reaches c_thresh."""

    site: Tuple[int, ...] = Field(description="Chain index k, or lattice coordinates")
    c_thresh: float = Field(gt=0)
    t_over_tau: float = Field(ge=0)
    velocity: Optional[float] = Field(
        default=None,
        description="Backwards finite difference 1/(t_k - t_{k-1}); absent for the first site",
    )

    @model_validator(mode="after")
    def _finite(self) -> "ThresholdCrossing":
        if not math.isfinite(self.t_over_tau):
            raise ValueError("crossing time must be finite")
        return self
