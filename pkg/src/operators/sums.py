"""Operator sums: weighted collections of Pauli strings and their commutators."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from ..errors import DimensionError
from .exact import GaussianRational
from .pauli import PHASES, PauliString, multiply_keys

Coefficient = Union[complex, GaussianRational]
Key = Tuple[int, int]


class OperatorSum:
    """Immutable map from canonical Pauli strings to coefficients.

    In exact mode every coefficient is a GaussianRational and only exact
    zeros are dropped; otherwise coefficients are Python complex numbers
    and anything with magnitude <= prune is dropped (prune=0 keeps all
    nonzero values).
    """

    __slots__ = ("_terms", "_qubit_count", "_exact")

    def __init__(
        self,
        qubit_count: int,
        terms: Optional[Mapping[Union[Key, PauliString], object]] = None,
        *,
        exact: bool = False,
        prune: float = 0.0,
    ):
        if qubit_count < 1:
            raise DimensionError("an operator sum needs at least one qubit")
        self._qubit_count = qubit_count
        self._exact = exact
        limit = 1 << qubit_count
        cleaned: Dict[Key, Coefficient] = {}
        for key, value in (terms or {}).items():
            if isinstance(key, PauliString):
                if key.qubit_count != qubit_count:
                    raise DimensionError(
                        f"string on {key.qubit_count} qubits in a {qubit_count}-qubit sum"
                    )
                key = key.key
            elif not (0 <= key[0] < limit and 0 <= key[1] < limit):
                raise DimensionError(f"masks do not fit in {qubit_count} qubits")
            coeff = GaussianRational.of(value) if exact else complex(value)
            if _is_kept(coeff, prune):
                cleaned[key] = coeff
        self._terms = cleaned

    @classmethod
    def _from_clean(cls, qubit_count: int, terms: Dict[Key, Coefficient], exact: bool) -> "OperatorSum":
        # Internal constructor for dictionaries already validated and pruned.
        obj = cls.__new__(cls)
        obj._qubit_count = qubit_count
        obj._exact = exact
        obj._terms = terms
        return obj

    @classmethod
    def from_pauli(cls, pauli: PauliString, coefficient: object = 1, *, exact: bool = False) -> "OperatorSum":
        return cls(pauli.qubit_count, {pauli.key: coefficient}, exact=exact)

    @property
    def qubit_count(self) -> int:
        return self._qubit_count

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def terms(self) -> Dict[PauliString, Coefficient]:
        """Copy of the terms keyed by PauliString."""
        n = self._qubit_count
        return {PauliString(x, z, n): c for (x, z), c in self._terms.items()}

    def items(self) -> Iterator[Tuple[Key, Coefficient]]:
        """Raw (x_mask, z_mask) keys with coefficients."""
        return iter(self._terms.items())

    def coefficient(self, pauli: PauliString) -> Coefficient:
        zero: Coefficient = GaussianRational() if self._exact else 0j
        return self._terms.get(pauli.key, zero)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def to_complex(self) -> "OperatorSum":
        if not self._exact:
            return self
        return OperatorSum._from_clean(
            self._qubit_count, {k: complex(c) for k, c in self._terms.items()}, False
        )

    def scale(self, factor: object) -> "OperatorSum":
        if self._exact:
            f = GaussianRational.of(factor)
            terms = {k: c * f for k, c in self._terms.items()}
            terms = {k: c for k, c in terms.items() if c}
        else:
            f = complex(factor)
            terms = {k: c * f for k, c in self._terms.items()}
            terms = {k: c for k, c in terms.items() if c != 0}
        return OperatorSum._from_clean(self._qubit_count, terms, self._exact)

    def __add__(self, other: "OperatorSum") -> "OperatorSum":
        a, b = _aligned(self, other)
        terms = dict(a._terms)
        for key, coeff in b._terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return OperatorSum(a._qubit_count, terms, exact=a._exact)

    def __neg__(self) -> "OperatorSum":
        return self.scale(-1)

    def __sub__(self, other: "OperatorSum") -> "OperatorSum":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorSum):
            return NotImplemented
        if self._qubit_count != other._qubit_count:
            return False
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def norm_squared(self) -> Union[float, Fraction]:
        """Sum of |coefficient|^2; exact (a Fraction) in exact mode."""
        if self._exact:
            return sum((c.abs_squared() for c in self._terms.values()), Fraction(0))
        return math.fsum(c.real * c.real + c.imag * c.imag for c in self._terms.values())

    def __repr__(self) -> str:
        n = self._qubit_count
        shown = ", ".join(
            f"{c}*{PauliString(x, z, n).label}" for (x, z), c in list(self._terms.items())[:6]
        )
        more = "" if len(self._terms) <= 6 else f", ... ({len(self._terms)} terms)"
        return f"OperatorSum({shown}{more})"


def _is_kept(coeff: Coefficient, prune: float) -> bool:
    if isinstance(coeff, GaussianRational):
        return bool(coeff)
    return coeff != 0 and abs(coeff) > prune


def _aligned(a: OperatorSum, b: OperatorSum) -> Tuple[OperatorSum, OperatorSum]:
    if a.qubit_count != b.qubit_count:
        raise DimensionError(f"qubit counts differ: {a.qubit_count} != {b.qubit_count}")
    if a.exact != b.exact:
        return a.to_complex(), b.to_complex()
    return a, b


def commutator_sum(a: OperatorSum, b: OperatorSum, *, prune: float = 0.0) -> OperatorSum:
    """[A, B] by bilinearity over string pairs; exact cancellations removed."""
    a, b = _aligned(a, b)
    exact = a.exact
    a_items = list(a.items())
    acc: Dict[Key, Coefficient] = {}
    for kb, cb in b.items():
        xb, zb = kb
        for ka, ca in a_items:
            xa, za = ka
            if ((xa & zb).bit_count() + (za & xb).bit_count()) & 1 == 0:
                continue
            exponent, key = multiply_keys(ka, kb)
            if exact:
                value = (ca * cb).times_i_power(exponent) * 2
            else:
                value = 2 * ca * cb * PHASES[exponent]
            if key in acc:
                acc[key] = acc[key] + value
            else:
                acc[key] = value
    cleaned = {k: c for k, c in acc.items() if _is_kept(c, prune)}
    return OperatorSum._from_clean(a.qubit_count, cleaned, exact)


def frobenius_norm(a: OperatorSum) -> float:
    """Normalized Frobenius norm sqrt(Tr(A^dagger A)/2^n).

    Pauli strings are orthonormal under Tr(P^dagger Q)/2^n, so this is the
    Euclidean norm of the coefficient vector.
    """
    return math.sqrt(float(a.norm_squared()))
