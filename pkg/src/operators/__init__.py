"""Operators package: Pauli-string algebra, operator sums and dense rendering."""

from .exact import GaussianRational
from .pauli import PauliString, multiply, commutator, commutes
from .sums import OperatorSum, commutator_sum, frobenius_norm
from .dense import DenseOperator, to_dense, pauli_to_dense, z_diagonal, check_dense_limit

__all__ = [
    "GaussianRational",
    "PauliString",
    "multiply",
    "commutator",
    "commutes",
    "OperatorSum",
    "commutator_sum",
    "frobenius_norm",
    "DenseOperator",
    "to_dense",
    "pauli_to_dense",
    "z_diagonal",
    "check_dense_limit",
]
