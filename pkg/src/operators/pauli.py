"""
Pauli strings in symplectic bitmask form.

Qubit k (1-based, as everywhere at the public interface) occupies bit k-1
of both masks:

    x bit  z bit   factor
      0      0       I
      1      0       X
      0      1       Z
      1      1       Y

A string never carries a phase; phases live in the coefficient of the
enclosing OperatorSum. With Y = i X Z, a string equals
i**popcount(x & z) * X**x Z**z, which is what the phase bookkeeping in
`multiply` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

from ..errors import DimensionError, SiteIndexError

# i**e for e = 0..3
PHASES: Tuple[complex, ...] = (1 + 0j, 1j, -1 + 0j, -1j)

_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


@dataclass(frozen=True, slots=True)
class PauliString:
    """Phase-free tensor product of single-qubit Paulis."""

    x_mask: int
    z_mask: int
    qubit_count: int = field(compare=False)

    def __post_init__(self) -> None:
        if self.qubit_count < 1:
            raise DimensionError("a Pauli string needs at least one qubit")
        limit = 1 << self.qubit_count
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise DimensionError(f"masks do not fit in {self.qubit_count} qubits")

    @classmethod
    def single(cls, letter: str, qubit: int, qubit_count: int) -> "PauliString":
        """One non-identity factor on a 1-based qubit."""
        return cls.from_factors({qubit: letter}, qubit_count)

    @classmethod
    def from_factors(cls, factors: dict[int, str], qubit_count: int) -> "PauliString":
        """Build from a 1-based {qubit: 'X'|'Y'|'Z'|'I'} mapping."""
        x_mask = z_mask = 0
        for qubit, letter in factors.items():
            if not 1 <= qubit <= qubit_count:
                raise SiteIndexError(f"qubit {qubit} outside 1..{qubit_count}")
            letter = letter.upper()
            if letter not in ("I", "X", "Y", "Z"):
                raise ValueError(f"unknown Pauli letter {letter!r}")
            bit = 1 << (qubit - 1)
            if letter in ("X", "Y"):
                x_mask |= bit
            if letter in ("Z", "Y"):
                z_mask |= bit
        return cls(x_mask, z_mask, qubit_count)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse a label such as 'XIZY'; the first character is qubit 1."""
        return cls.from_factors({i + 1: c for i, c in enumerate(label)}, len(label))

    @property
    def key(self) -> Tuple[int, int]:
        return (self.x_mask, self.z_mask)

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    @property
    def support(self) -> Tuple[int, ...]:
        """1-based qubits carrying a non-identity factor."""
        mask = self.x_mask | self.z_mask
        return tuple(q + 1 for q in range(self.qubit_count) if mask >> q & 1)

    @property
    def label(self) -> str:
        return "".join(
            _LETTERS[(self.x_mask >> q & 1, self.z_mask >> q & 1)]
            for q in range(self.qubit_count)
        )

    def commutes_with(self, other: "PauliString") -> bool:
        _check_counts(self.qubit_count, other.qubit_count)
        return commutes(self.key, other.key)

    def __str__(self) -> str:
        return self.label


def _check_counts(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"qubit counts differ: {a} != {b}")


def commutes(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    """Symplectic test on raw (x, z) mask pairs."""
    return ((a[0] & b[1]).bit_count() + (a[1] & b[0]).bit_count()) % 2 == 0


def multiply_keys(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, Tuple[int, int]]:
    """Product of raw mask pairs as (exponent of i mod 4, product key)."""
    x1, z1 = a
    x2, z2 = b
    x3, z3 = x1 ^ x2, z1 ^ z2
    exponent = (
        (x1 & z1).bit_count()
        + (x2 & z2).bit_count()
        - (x3 & z3).bit_count()
        + 2 * (z1 & x2).bit_count()
    ) % 4
    return exponent, (x3, z3)


def multiply(a: PauliString, b: PauliString) -> Tuple[complex, PauliString]:
    """Operator product ab = phase * product with phase in {1, i, -1, -i}."""
    _check_counts(a.qubit_count, b.qubit_count)
    exponent, (x, z) = multiply_keys(a.key, b.key)
    return PHASES[exponent], PauliString(x, z, a.qubit_count)


def commutator(a: PauliString, b: PauliString) -> "OperatorSum":
    """[a, b]: empty when the strings commute, else 2*ab as a single term."""
    from .sums import OperatorSum

    _check_counts(a.qubit_count, b.qubit_count)
    if commutes(a.key, b.key):
        return OperatorSum(a.qubit_count)
    exponent, key = multiply_keys(a.key, b.key)
    return OperatorSum(a.qubit_count, {key: 2 * PHASES[exponent]})

