"""Graph builders and Hamiltonian assembly."""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..config import get_settings
from ..errors import CapExceededError, LRFrontError
from ..operators.exact import GaussianRational
from ..operators.pauli import PauliString
from ..operators.sums import OperatorSum
from ..schemas.graph import CouplingGraph, LatticeSpec

logger = logging.getLogger(__name__)

Coordinates = Tuple[int, ...]


def build_chain(n_qubits: int, delta_over_gamma: float) -> CouplingGraph:
    """Linear array with near-neighbor coupling Delta on every edge (k, k+1)."""
    if n_qubits < 1:
        raise LRFrontError(f"a chain needs at least one qubit, got {n_qubits}")
    if not delta_over_gamma > 0:
        raise LRFrontError(f"delta_over_gamma must be positive, got {delta_over_gamma}")
    couplings = {(k, k + 1): float(delta_over_gamma) for k in range(1, n_qubits)}
    return CouplingGraph(qubit_count=n_qubits, couplings=couplings)


def lattice_coordinates(spec: LatticeSpec):
    """All lattice sites in qubit-index order."""
    axis = range(-spec.extent, spec.extent + 1)
    return itertools.product(axis, repeat=spec.dimension)


def build_lattice(
    spec: LatticeSpec,
    *,
    site_cap: Optional[int] = None,
) -> Tuple[CouplingGraph, Dict[Coordinates, int]]:
    """Hypercubic lattice with uniform near-neighbor coupling.

    Returns the graph and the map from lattice coordinates to 1-based
    qubit indices; the reference site is the origin.
    """
    cap = get_settings().lattice_site_cap if site_cap is None else site_cap
    if spec.site_count > cap:
        logger.warning("lattice of %d sites refused (cap %d)", spec.site_count, cap)
        raise CapExceededError("lattice sites", spec.site_count, cap)

    index = {coords: i + 1 for i, coords in enumerate(lattice_coordinates(spec))}
    couplings: Dict[Tuple[int, int], float] = {}
    for coords, q in index.items():
        for axis in range(spec.dimension):
            if coords[axis] == spec.extent:
                continue
            step = list(coords)
            step[axis] += 1
            neighbor = index[tuple(step)]
            couplings[(q, neighbor)] = float(spec.delta_over_gamma)
    graph = CouplingGraph(qubit_count=len(index), couplings=couplings)
    logger.debug("built %dD lattice: %d sites, %d edges", spec.dimension, len(index), len(couplings))
    return graph, index


def hamiltonian(graph: CouplingGraph, *, exact: bool = False) -> OperatorSum:
    """H/gamma = -sum_k X_k - 1/2 sum_{j<k} (Delta_jk/gamma) Z_j Z_k.

    In exact mode the couplings enter as the exact rational value of their
    binary floating-point representation.
    """
    n = graph.qubit_count
    terms = {}
    for q in range(n):
        terms[(1 << q, 0)] = -1
    for (j, k), delta in graph.couplings.items():
        key = (0, (1 << (j - 1)) | (1 << (k - 1)))
        terms[key] = GaussianRational(-Fraction(delta) / 2) if exact else -0.5 * delta
    return OperatorSum(n, terms, exact=exact)


def sigma_z(qubit: int, qubit_count: int, *, exact: bool = False) -> OperatorSum:
    """Single sigma_z as an operator sum."""
    return OperatorSum.from_pauli(PauliString.single("Z", qubit, qubit_count), exact=exact)
