"""Dense engine - exact correlations by full diagonalization.

One eigendecomposition serves every time: in the eigenbasis the Heisenberg
operator is A(t)[a, b] = exp(i*pi*(E_a - E_b)*s) * A[a, b] with s = t/tau
and energies in units of gamma.
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy.linalg import eigh
from scipy.optimize import brentq

from ..config import get_settings
from ..constants import DENSE_FLOOR, Engine
from ..errors import DegenerateCrossingError, LRFrontError, SiteIndexError
from ..operators.dense import check_dense_limit, z_diagonal
from ..schemas.analytic import ThresholdCrossing
from ..schemas.graph import CouplingGraph
from ..schemas.series import CorrelationSeries
from .series import threshold_time_series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (units of gamma) and orthonormal eigenvectors of H."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    qubit_count: int

    @property
    def dimension(self) -> int:
        return self.eigenvalues.shape[0]

    def residual(self, matrix: np.ndarray) -> float:
        """||V diag(E) V^T - H|| / ||H||."""
        v = self.eigenvectors
        rebuilt = (v * self.eigenvalues) @ v.conj().T
        scale = np.linalg.norm(matrix) or 1.0
        return float(np.linalg.norm(rebuilt - matrix) / scale)

    def in_eigenbasis(self, diagonal: np.ndarray) -> np.ndarray:
        """V^T diag(d) V for an operator diagonal in the computational basis."""
        v = self.eigenvectors
        return v.conj().T @ (diagonal[:, None] * v)


def dense_hamiltonian(graph: CouplingGraph, *, limit: Optional[int] = None) -> np.ndarray:
    """Real symmetric H/gamma built directly from basis-index bits.

    Same convention as the operator algebra: qubit 1 is the most
    significant bit. Agrees with to_dense(hamiltonian(graph)).
    """
    n = graph.qubit_count
    check_dense_limit(n, limit)
    dim = 1 << n
    index = np.arange(dim)

    diagonal = np.zeros(dim)
    for (j, k), delta in graph.couplings.items():
        diagonal -= 0.5 * delta * z_diagonal(j, n) * z_diagonal(k, n)

    matrix = np.diag(diagonal)
    for q in range(1, n + 1):
        flipped = index ^ (1 << (n - q))
        matrix[flipped, index] -= 1.0
    return matrix


def diagonalize(graph: CouplingGraph, *, limit: Optional[int] = None) -> Spectrum:
    """Full Hermitian eigendecomposition of the graph's Hamiltonian."""
    matrix = dense_hamiltonian(graph, limit=limit)
    started = time.perf_counter()
    eigenvalues, eigenvectors = eigh(matrix)
    logger.info(
        "diagonalized %d qubits (dim %d) in %.3fs",
        graph.qubit_count, matrix.shape[0], time.perf_counter() - started,
    )
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=eigenvectors, qubit_count=graph.qubit_count)


class ExactCorrelator:
    """C_jk(t) for one pair, reusing the eigenbasis operators across times."""

    def __init__(self, spectrum: Spectrum, j: int, k: int):
        n = spectrum.qubit_count
        for name, q in (("j", j), ("k", k)):
            if not 1 <= q <= n:
                raise SiteIndexError(f"{name}={q} outside 1..{n}")
        self.j = j
        self.k = k
        self.dimension = spectrum.dimension
        self._a = spectrum.in_eigenbasis(z_diagonal(j, n))
        self._b = spectrum.in_eigenbasis(z_diagonal(k, n))
        energies = spectrum.eigenvalues
        self._gaps = energies[:, None] - energies[None, :]

    def __call__(self, t_over_tau: float) -> float:
        # [A, B] = 0 for two sigma_z, so [A(t), B] = [A(t) - A, B]; the
        # difference carries exp(i theta) - 1 = 2i sin(theta/2) exp(i theta/2).
        half = 0.5 * math.pi * t_over_tau * self._gaps
        d = self._a * (2j * np.sin(half) * np.exp(1j * half))
        m = d @ self._b
        commutator = m - m.conj().T
        return float(np.linalg.norm(commutator) / math.sqrt(self.dimension))

    def evolved_norm(self, t_over_tau: float) -> float:
        """Normalized Frobenius norm of sigma_z^(j)(t); 1 by unitarity."""
        phase = np.exp(1j * math.pi * t_over_tau * self._gaps)
        return float(np.linalg.norm(self._a * phase) / math.sqrt(self.dimension))


def _evaluate(correlator: ExactCorrelator, times: Sequence[float], workers: int) -> List[float]:
    if workers <= 1 or len(times) < 2:
        return [correlator(t) for t in times]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(correlator, times))


def correlation_exact(
    graph: CouplingGraph,
    j: int,
    k: int,
    times: Sequence[float],
    *,
    spectrum: Optional[Spectrum] = None,
    limit: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> CorrelationSeries:
    """Exact C_jk at every t/tau of the grid, valid at all times."""
    if spectrum is None:
        spectrum = diagonalize(graph, limit=limit)
    workers = get_settings().max_workers if max_workers is None else max_workers
    correlator = ExactCorrelator(spectrum, j, k)
    values = _evaluate(correlator, list(times), workers)
    return CorrelationSeries(
        engine=Engine.EXACT,
        source=j,
        target=k,
        times=list(times),
        values=values,
        graph_digest=graph.digest(),
    )


def threshold_time_exact(
    graph: CouplingGraph,
    j: int,
    k: int,
    c_thresh: float,
    t_max: float,
    *,
    spectrum: Optional[Spectrum] = None,
    samples: int = 400,
    floor: float = DENSE_FLOOR,
) -> float:
    """First t/tau at which the exact C_jk reaches c_thresh.

    At or above ``floor`` the crossing is bracketed on a uniform grid of
    the dense engine over [0, t_max] and refined with brentq. The dense
    engine resolves C only to about 1e-13 absolute, so lower thresholds
    are crossed by the series summed from the leading order, which keeps
    relative precision there.
    """
    if c_thresh <= 0:
        raise LRFrontError("c_thresh must be positive")
    check_dense_limit(graph.qubit_count)
    if c_thresh < floor:
        return threshold_time_series(graph, j, k, c_thresh, t_max)
    if spectrum is None:
        spectrum = diagonalize(graph)
    correlator = ExactCorrelator(spectrum, j, k)
    grid = np.linspace(0.0, t_max, samples + 1)
    previous = grid[0]
    for t in grid[1:]:
        if correlator(t) >= c_thresh:
            return float(brentq(lambda s: correlator(s) - c_thresh, previous, t, xtol=1e-14, rtol=1e-12))
        previous = t
    raise LRFrontError(f"C_{j}{k} stays below {c_thresh:g} up to t/tau = {t_max:g}")


def finite_difference_velocity_exact(
    graph: CouplingGraph,
    j: int,
    targets: Sequence[int],
    c_thresh: float,
    t_max: float,
    *,
    spectrum: Optional[Spectrum] = None,
    floor: float = DENSE_FLOOR,
) -> List[ThresholdCrossing]:
    """Crossing times of successive targets from the exact engines, with v_k = 1/(t_k - t_{k-1})."""
    if not targets:
        raise LRFrontError("no sites given")
    if spectrum is None and c_thresh >= floor:
        spectrum = diagonalize(graph)
    crossings: List[ThresholdCrossing] = []
    previous: Optional[float] = None
    for k in targets:
        t = threshold_time_exact(graph, j, k, c_thresh, t_max, spectrum=spectrum, floor=floor)
        velocity = None
        if previous is not None:
            if t <= previous:
                raise DegenerateCrossingError(f"crossing time of site {k} does not exceed the previous one")
            velocity = 1.0 / (t - previous)
        crossings.append(ThresholdCrossing(site=(k,), c_thresh=c_thresh, t_over_tau=t, velocity=velocity))
        previous = t
    return crossings
