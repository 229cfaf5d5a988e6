"""Front snapshots: per-site log10 C from the closed forms, clipped from above."""

import itertools
import logging
import math
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import gammaln

from ..config import get_settings
from ..constants import DEFAULT_CLIP_LOG10
from ..errors import CapExceededError, LRFrontError
from ..schemas.analytic import FrontSnapshot, SiteValue
from ..schemas.graph import LatticeSpec
from ..utils.logspace import LN10
from .correlations import LN2, LN_PI

logger = logging.getLogger(__name__)


def log_correlations(
    hop_counts: np.ndarray,
    half_log_weights: np.ndarray,
    t_over_tau: float,
) -> np.ndarray:
    """Vectorized natural log of the leading-order correlation; -inf where it vanishes."""
    hop_counts = np.asarray(hop_counts, dtype=float)
    n = 2.0 * hop_counts + 1.0
    if t_over_tau < 0:
        raise LRFrontError(f"t/tau must be nonnegative, got {t_over_tau}")
    if t_over_tau == 0:
        return np.full(hop_counts.shape, -np.inf)
    return (
        (hop_counts + 2.0) * LN2
        + n * (LN_PI + math.log(t_over_tau))
        - gammaln(n + 1.0)
        + half_log_weights
    )


def _log_abs(delta_over_gamma: float) -> float:
    return math.log(abs(delta_over_gamma))


def chain_log10_values(sites: Sequence[int], delta_over_gamma: float, t_over_tau: float) -> np.ndarray:
    """log10 C_k of a uniform chain for every requested k."""
    k = np.asarray(sites, dtype=float)
    if np.any(k < 1):
        raise LRFrontError("chain sites start at 1")
    hops = k - 1.0
    return log_correlations(hops, hops * _log_abs(delta_over_gamma), t_over_tau) / LN10


def lattice_log10_values(coords: np.ndarray, delta_over_gamma: float, t_over_tau: float) -> np.ndarray:
    """log10 C at lattice coordinates (rows of ``coords``) relative to the origin."""
    steps = np.abs(np.asarray(coords, dtype=float))
    hops = steps.sum(axis=1)
    log_paths = gammaln(hops + 1.0) - gammaln(steps + 1.0).sum(axis=1)
    half_log = hops * _log_abs(delta_over_gamma) + 0.5 * log_paths
    return log_correlations(hops, half_log, t_over_tau) / LN10


def _snapshot(
    sites: Iterable[Tuple[int, ...]],
    values: np.ndarray,
    t_over_tau: float,
    delta_over_gamma: float,
    clip_log10: float,
) -> FrontSnapshot:
    kept = [
        SiteValue(coordinates=site, log10_value=float(v))
        for site, v in zip(sites, values)
        if np.isfinite(v) and v <= clip_log10
    ]
    return FrontSnapshot(
        t_over_tau=t_over_tau, delta_over_gamma=delta_over_gamma, clip_log10=clip_log10, sites=kept
    )


def _check_cap(count: int, site_cap: Optional[int]) -> None:
    cap = get_settings().snapshot_site_cap if site_cap is None else site_cap
    if count > cap:
        logger.warning("snapshot of %d sites refused (cap %d)", count, cap)
        raise CapExceededError("snapshot sites", count, cap)


def chain_front_snapshot(
    sites: Sequence[int],
    delta_over_gamma: float,
    t_over_tau: float,
    clip_log10: float = DEFAULT_CLIP_LOG10,
    *,
    site_cap: Optional[int] = None,
) -> FrontSnapshot:
    """Snapshot over chain sites k (qubit 1 is the reference)."""
    sites = list(sites)
    _check_cap(len(sites), site_cap)
    values = chain_log10_values(sites, delta_over_gamma, t_over_tau)
    return _snapshot(((k,) for k in sites), values, t_over_tau, delta_over_gamma, clip_log10)


def lattice_front_snapshot(
    spec: LatticeSpec,
    t_over_tau: float,
    clip_log10: float = DEFAULT_CLIP_LOG10,
    *,
    site_cap: Optional[int] = None,
) -> FrontSnapshot:
    """Snapshot over every site of a lattice, origin as the reference."""
    _check_cap(spec.site_count, site_cap)
    axis = range(-spec.extent, spec.extent + 1)
    coords = np.array(list(itertools.product(axis, repeat=spec.dimension)), dtype=int)
    values = lattice_log10_values(coords, spec.delta_over_gamma, t_over_tau)
    sites = (tuple(int(c) for c in row) for row in coords)
    return _snapshot(sites, values, t_over_tau, spec.delta_over_gamma, clip_log10)


def front_snapshot(
    source: Union[LatticeSpec, Sequence[int]],
    delta_over_gamma: float,
    t_over_tau: float,
    clip_log10: float = DEFAULT_CLIP_LOG10,
    *,
    site_cap: Optional[int] = None,
) -> FrontSnapshot:
    """Snapshot for a lattice description or an explicit list of chain sites.

    For a LatticeSpec the coupling is taken from ``delta_over_gamma``.
    """
    if isinstance(source, LatticeSpec):
        spec = source.model_copy(update={"delta_over_gamma": delta_over_gamma})
        return lattice_front_snapshot(spec, t_over_tau, clip_log10, site_cap=site_cap)
    return chain_front_snapshot(source, delta_over_gamma, t_over_tau, clip_log10, site_cap=site_cap)
