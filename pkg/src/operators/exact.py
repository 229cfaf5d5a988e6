"""Exact Gaussian-rational coefficients for leading-order extraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction, "GaussianRational"]


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number re + i*im with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, value: Union[int, float, Fraction, complex, "GaussianRational"]) -> "GaussianRational":
        """Convert ints, floats (exactly, via their binary value) and complex numbers."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value))

    def _coerce(self, other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __abs__(self) -> float:
        return float(self.abs_squared()) ** 0.5

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def times_i_power(self, power: int) -> "GaussianRational":
        """Multiply by i**power without general multiplication."""
        power %= 4
        if power == 0:
            return self
        if power == 1:
            return GaussianRational(-self.im, self.re)
        if power == 2:
            return GaussianRational(-self.re, -self.im)
        return GaussianRational(self.im, -self.re)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
