"""Signed values carried as natural-log magnitudes.

Closed-form correlations span hundreds of decades (factorials of 2*10**4,
values near 1e-170), so they are never formed in linear space until a
caller asks for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.special import logsumexp

LN10 = math.log(10.0)


@dataclass(frozen=True, slots=True)
class LogValue:
    """sign * exp(log_magnitude); sign 0 means exactly zero (log_magnitude = -inf)."""

    sign: int
    log_magnitude: float

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign == 0 and self.log_magnitude != -math.inf:
            object.__setattr__(self, "log_magnitude", -math.inf)
        if self.sign != 0 and math.isnan(self.log_magnitude):
            raise ValueError("log magnitude is NaN")

    @classmethod
    def zero(cls) -> "LogValue":
        return cls(0, -math.inf)

    @classmethod
    def one(cls) -> "LogValue":
        return cls(1, 0.0)

    @classmethod
    def from_log(cls, log_magnitude: float, sign: int = 1) -> "LogValue":
        if log_magnitude == -math.inf:
            return cls.zero()
        return cls(sign, float(log_magnitude))

    @classmethod
    def from_float(cls, value: float) -> "LogValue":
        if value == 0:
            return cls.zero()
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    @classmethod
    def sum(cls, values: Iterable["LogValue"]) -> "LogValue":
        """Signed log-sum-exp of many values."""
        values = [v for v in values if v.sign != 0]
        if not values:
            return cls.zero()
        logs = np.array([v.log_magnitude for v in values])
        signs = np.array([v.sign for v in values], dtype=float)
        result, sign = logsumexp(logs, b=signs, return_sign=True)
        if sign == 0 or not np.isfinite(result):
            return cls.zero()
        return cls(int(sign), float(result))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def log10(self) -> float:
        """log10 of the magnitude (-inf for zero)."""
        return self.log_magnitude / LN10

    def to_float(self) -> float:
        """Linear value; underflows to 0.0 or overflows to inf as floats do."""
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log_magnitude)
        except OverflowError:
            return self.sign * math.inf

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.sign == 0 or other.sign == 0:
            return LogValue.zero()
        return LogValue(self.sign * other.sign, self.log_magnitude + other.log_magnitude)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero LogValue")
        if self.sign == 0:
            return LogValue.zero()
        return LogValue(self.sign * other.sign, self.log_magnitude - other.log_magnitude)

    def __pow__(self, exponent: float) -> "LogValue":
        if self.sign == 0:
            if exponent > 0:
                return LogValue.zero()
            if exponent == 0:
                return LogValue.one()
            raise ZeroDivisionError("zero raised to a negative power")
        if self.sign < 0 and float(exponent) != int(exponent):
            raise ValueError("fractional power of a negative LogValue")
        sign = 1 if self.sign > 0 or int(exponent) % 2 == 0 else -1
        return LogValue(sign, self.log_magnitude * exponent)

    def __add__(self, other: "LogValue") -> "LogValue":
        return LogValue.sum((self, other))

    def __neg__(self) -> "LogValue":
        return LogValue(-self.sign, self.log_magnitude)

    def __abs__(self) -> "LogValue":
        return LogValue(abs(self.sign), self.log_magnitude)

    def sqrt(self) -> "LogValue":
        return self ** 0.5

    def scaled_log(self, log_factor: float) -> "LogValue":
        """Multiply by exp(log_factor)."""
        if self.sign == 0:
            return self
        return LogValue(self.sign, self.log_magnitude + log_factor)

    def __repr__(self) -> str:
        if self.sign == 0:
            return "LogValue(0)"
        return f"LogValue({'-' if self.sign < 0 else ''}exp({self.log_magnitude:.12g}))"
