"""Closed-form early-time correlations, evaluated in log space.

Every closed form is the leading power law

    C = 2**(L+2) * pi**(2L+1) / (2L+1)! * sqrt(W) * (t/tau)**(2L+1),

with L the minimum hop count and W the sum over minimum paths of the
squared coupling products. Chains and square lattices are special cases
with W known in closed form.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from scipy.special import gammaln

from ..constants import Engine
from ..errors import DegenerateCrossingError, LRFrontError, UnreachablePairError
from ..schemas.analytic import ThresholdCrossing
from ..schemas.graph import MinPathSummary
from ..schemas.series import CorrelationSeries
from ..utils.logspace import LogValue

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)
LN_PI = math.log(math.pi)

Site = Union[int, Tuple[int, ...], MinPathSummary]


@dataclass(frozen=True)
class PowerLaw:
    """C(s) = exp(log_prefactor) * s**exponent."""

    log_prefactor: float
    exponent: int

    def at(self, t_over_tau: float) -> LogValue:
        if t_over_tau < 0:
            raise LRFrontError(f"t/tau must be nonnegative, got {t_over_tau}")
        if self.log_prefactor == -math.inf:
            return LogValue.zero()
        if t_over_tau == 0:
            return LogValue.zero()
        return LogValue.from_log(self.log_prefactor + self.exponent * math.log(t_over_tau))

    def inverse(self, c: float) -> float:
        """s with C(s) = c."""
        if c <= 0:
            raise LRFrontError(f"threshold must be positive, got {c}")
        if self.log_prefactor == -math.inf:
            raise LRFrontError("correlation vanishes identically; no crossing")
        return math.exp((math.log(c) - self.log_prefactor) / self.exponent)

    @property
    def log10_prefactor(self) -> float:
        return self.log_prefactor / math.log(10.0)


def leading_power_law(hop_count: int, half_log_weight: float) -> PowerLaw:
    """Power law for hop count L and 0.5 * ln W."""
    if hop_count < 0:
        raise LRFrontError(f"hop count must be nonnegative, got {hop_count}")
    n = 2 * hop_count + 1
    log_prefactor = (hop_count + 2) * LN2 + n * LN_PI - float(gammaln(n + 1)) + half_log_weight
    return PowerLaw(log_prefactor=log_prefactor, exponent=n)


def _log_abs(delta_over_gamma: float) -> float:
    return math.log(abs(delta_over_gamma)) if delta_over_gamma != 0 else -math.inf


def _half_log_uniform(hop_count: int, delta_over_gamma: float, path_count_log: float = 0.0) -> float:
    if hop_count == 0:
        return 0.5 * path_count_log
    return hop_count * _log_abs(delta_over_gamma) + 0.5 * path_count_log


def chain_power_law(k: int, delta_over_gamma: float) -> PowerLaw:
    if k < 1:
        raise LRFrontError(f"chain site must be >= 1, got {k}")
    return leading_power_law(k - 1, _half_log_uniform(k - 1, delta_over_gamma))


def lattice_power_law(coordinates: Sequence[int], delta_over_gamma: float) -> PowerLaw:
    """Origin to a lattice site in any quadrant/octant; W = multinomial * Delta**(2L)."""
    steps = [abs(int(c)) for c in coordinates]
    hop_count = sum(steps)
    log_paths = float(gammaln(hop_count + 1)) - sum(float(gammaln(s + 1)) for s in steps)
    return leading_power_law(hop_count, _half_log_uniform(hop_count, delta_over_gamma, log_paths))


def summary_power_law(summary: MinPathSummary) -> PowerLaw:
    if not summary.reachable:
        raise UnreachablePairError(summary.source, summary.target)
    return leading_power_law(summary.hop_count, 0.5 * summary.weight_sum.log_magnitude)


def chain_correlation(k: int, delta_over_gamma: float, t_over_tau: float) -> LogValue:
    """C_k between qubit 1 and qubit k of a uniform chain."""
    return chain_power_law(k, delta_over_gamma).at(t_over_tau)


def general_correlation(summary: MinPathSummary, t_over_tau: float) -> LogValue:
    """Path-sum result for an arbitrary network."""
    return summary_power_law(summary).at(t_over_tau)


def correlation_analytic(summary: MinPathSummary, times: Sequence[float]) -> CorrelationSeries:
    """Closed-form series on a time grid, carrying log10 C where linear C underflows."""
    law = summary_power_law(summary)
    values = [law.at(t) for t in times]
    return CorrelationSeries(
        engine=Engine.ANALYTIC,
        source=summary.source,
        target=summary.target,
        times=list(times),
        values=[v.to_float() for v in values],
        log10_values=[v.log10 for v in values],
    )


def lattice2d_correlation(
n: int, m: int, delta_over_gamma: float, t_over_tau: float) -> LogValue:
    return lattice_power_law((n, m), delta_over_gamma).at(t_over_tau)


def lattice3d_correlation(n: int, m: int, p: int, delta_over_gamma: float, t_over_tau: float) -> LogValue:
    return lattice_power_law((n, m, p), delta_over_gamma).at(t_over_tau)


def site_power_law(site: Site, delta_over_gamma: float) -> PowerLaw:
    """Chain index, lattice coordinates or a network path summary."""
    if isinstance(site, MinPathSummary):
        return summary_power_law(site)
    if isinstance(site, int):
        return chain_power_law(site, delta_over_gamma)
    return lattice_power_law(site, delta_over_gamma)


def threshold_time(site: Site, delta_over_gamma: float, c_thresh: float) -> float:
    """t/tau at which the leading-order correlation of a site equals c_thresh.

    Inverts the power law in log space, so it is exact for any distance.
    """
    return site_power_law(site, delta_over_gamma).inverse(c_thresh)


def _site_key(site: Site) -> Tuple[int, ...]:
    if isinstance(site, MinPathSummary):
        return (site.target,)
    if isinstance(site, int):
        return (site,)
    return tuple(int(c) for c in site)


def finite_difference_velocity(
    sites: Sequence[Site],
    delta_over_gamma: float,
    c_thresh: float,
) -> List[ThresholdCrossing]:
    """Crossing times along a ray with v_k = 1/(t_k - t_{k-1}).

    The first site carries no velocity. Crossing times must increase
    strictly along the ray; equal or decreasing times raise
    DegenerateCrossingError.
    """
    if not sites:
        raise LRFrontError("no sites given")
    crossings: List[ThresholdCrossing] = []
    previous: Optional[float] = None
    for site in sites:
        t = threshold_time(site, delta_over_gamma, c_thresh)
        velocity = None
        if previous is not None:
            if t <= previous:
                raise DegenerateCrossingError(
                    f"site {_site_key(site)} crosses at t/tau={t!r}, not after {previous!r}"
                )
            velocity = 1.0 / (t - previous)
        crossings.append(
            ThresholdCrossing(site=_site_key(site), c_thresh=c_thresh, t_over_tau=t, velocity=velocity)
        )
        previous = t
    return crossings
