"""Engines package: dense diagonalization and nested-commutator series."""

from .dense import (
    ExactCorrelator,
    Spectrum,
    correlation_exact,
    dense_hamiltonian,
    diagonalize,
    finite_difference_velocity_exact,
    threshold_time_exact,
)
from .series import (
    CommutatorExpansion,
    RelativeSeries,
    correlation_series,
    correlation_series_grid,
    leading_term,
    leading_terms,
    threshold_time_series,
)

__all__ = [
    "ExactCorrelator",
    "Spectrum",
    "correlation_exact",
    "dense_hamiltonian",
    "diagonalize",
    "finite_difference_velocity_exact",
    "threshold_time_exact",
    "CommutatorExpansion",
    "RelativeSeries",
    "correlation_series",
    "correlation_series_grid",
    "leading_term",
    "leading_terms",
    "threshold_time_series",
]
