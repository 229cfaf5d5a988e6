"""Dense matrices for operator sums (oracle bridge to the exact engine).

Basis convention: qubit 1 is the leftmost tensor factor, i.e. the most
significant bit of the computational-basis index. sigma_z on qubit 1 of
two qubits is diag(1, 1, -1, -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import get_settings
from ..errors import DenseLimitError, DimensionError
from .pauli import PHASES, PauliString
from .sums import OperatorSum


@dataclass(frozen=True)
class DenseOperator:
    """A 2**qubit_count square complex matrix."""

    matrix: np.ndarray
    qubit_count: int

    def __post_init__(self) -> None:
        dim = 1 << self.qubit_count
        if self.matrix.shape != (dim, dim):
            raise DimensionError(
                f"matrix shape {self.matrix.shape} does not match {self.qubit_count} qubits"
            )

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def normalized_frobenius_norm(self) -> float:
        """sqrt(Tr(Q^dagger Q) / N)."""
        return float(np.linalg.norm(self.matrix) / np.sqrt(self.dimension))


def check_dense_limit(qubit_count: int, limit: Optional[int] = None) -> None:
    limit = get_settings().dense_limit if limit is None else limit
    if qubit_count > limit:
        raise DenseLimitError(qubit_count, limit)


def _basis_bit_mask(mask: int, qubit_count: int) -> int:
    # mask bit q (qubit q+1) -> basis-index bit qubit_count-1-q
    out = 0
    for q in range(qubit_count):
        if mask >> q & 1:
            out |= 1 << (qubit_count - 1 - q)
    return out


def z_diagonal(qubit: int, qubit_count: int) -> np.ndarray:
    """Diagonal of sigma_z on a 1-based qubit."""
    index = np.arange(1 << qubit_count)
    bit = (index >> (qubit_count - qubit)) & 1
    return 1.0 - 2.0 * bit


def pauli_to_dense(pauli: PauliString) -> np.ndarray:
    """Matrix of a single string: M[b ^ x, b] = i**|x&z| (-1)**|z & b|."""
    n = pauli.qubit_count
    dim = 1 << n
    index = np.arange(dim)
    x_bits = _basis_bit_mask(pauli.x_mask, n)
    z_bits = _basis_bit_mask(pauli.z_mask, n)
    sign = np.ones(dim)
    for p in range(n):
        if z_bits >> p & 1:
            sign *= 1.0 - 2.0 * ((index >> p) & 1)
    phase = PHASES[(pauli.x_mask & pauli.z_mask).bit_count() % 4]
    matrix = np.zeros((dim, dim), dtype=complex)
    matrix[index ^ x_bits, index] = phase * sign
    return matrix


def to_dense(operator: OperatorSum, *, limit: Optional[int] = None) -> DenseOperator:
    """Dense 2**n matrix of an operator sum in the standard tensor basis."""
    n = operator.qubit_count
    check_dense_limit(n, limit)
    dim = 1 << n
    matrix = np.zeros((dim, dim), dtype=complex)
    for pauli, coeff in operator.terms.items():
        matrix += complex(coeff) * pauli_to_dense(pauli)
    return DenseOperator(matrix, n)
