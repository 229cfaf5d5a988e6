"""Analytic package: closed-form correlations, asymptotics, velocities and fronts."""

from .correlations import (
    PowerLaw,
    chain_correlation,
    correlation_analytic,
    finite_difference_velocity,
    general_correlation,
    lattice2d_correlation,
    lattice3d_correlation,
    leading_power_law,
    site_power_law,
    threshold_time,
)
from .asymptotics import chain_asymptotic, chain_exponential_front
from .velocity import (
    from_dimensionless_time,
    reduce_angle_2d,
    reduce_angles_3d,
    reduce_direction_2d,
    reduce_direction_3d,
    to_dimensionless_time,
    v_lr_2d,
    v_lr_3d,
    v_lr_chain,
    v_lr_chain_dimensional,
    velocity_profile_2d,
    velocity_profile_3d,
)
from .fronts import chain_front_snapshot, front_snapshot, lattice_front_snapshot

__all__ = [
    "PowerLaw",
    "chain_correlation",
    "correlation_analytic",
    "finite_difference_velocity",
    "general_correlation",
    "lattice2d_correlation",
    "lattice3d_correlation",
    "leading_power_law",
    "site_power_law",
    "threshold_time",
    "chain_asymptotic",
    "chain_exponential_front",
    "from_dimensionless_time",
    "reduce_angle_2d",
    "reduce_angles_3d",
    "reduce_direction_2d",
    "reduce_direction_3d",
    "to_dimensionless_time",
    "v_lr_2d",
    "v_lr_3d",
    "v_lr_chain",
    "v_lr_chain_dimensional",
    "velocity_profile_2d",
    "velocity_profile_3d",
    "chain_front_snapshot",
    "front_snapshot",
    "lattice_front_snapshot",
]
