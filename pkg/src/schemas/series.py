"""Series schemas - correlation time series, leading-order terms and series diagnostics."""

import math
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..constants import Engine
from ..utils.logspace import LN10


class CorrelationSeries(BaseModel):
    """C_jk sampled on a grid of dimensionless times t/tau."""

    engine: Engine = Field(description="Engine that produced the values")
    source: int = Field(ge=1, description="Reference qubit j")
    target: int = Field(ge=1, description="Probe qubit k")
    times: List[float] = Field(description="Strictly increasing t/tau")
    values: List[float] = Field(description="C values; may underflow to 0 for closed forms")
    log10_values: Optional[List[float]] = Field(
        default=None,
        description="log10 C carried alongside when values span beyond float range",
    )
    graph_digest: Optional[str] = Field(default=None, description="Digest of the coupling graph")
    truncation_order: Optional[int] = Field(default=None, ge=1, description="n_max of the series engine")
    last_order_norms: Optional[List[float]] = Field(
        default=None,
        description="Series diagnostic per time: norm of the last included order",
    )

    @model_validator(mode="after")
    def _check_grid(self) -> "CorrelationSeries":
        if not self.times:
            raise ValueError("a correlation series needs at least one time")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        if len(self.values) != len(self.times):
            raise ValueError("values and times differ in length")
        if any(v < 0 or math.isnan(v) for v in self.values):
            raise ValueError("correlation values are norms and cannot be negative")
        for extra in (self.log10_values, self.last_order_norms):
            if extra is not None and len(extra) != len(self.times):
                raise ValueError("per-time columns must match the time grid")
        return self

    def log10(self) -> List[float]:
        """log10 C per time (-inf where C is zero)."""
        if self.log10_values is not None:
            return list(self.log10_values)
        return [math.log10(v) if v > 0 else -math.inf for v in self.values]


class SeriesEvaluation(BaseModel):
    """Truncated-series value at one time, with its truncation diagnostic."""

    value: float = Field(ge=0, description="Norm of the truncated sum")
    order: int = Field(ge=1, description="Highest included order n_max")
    last_order_norm: float = Field(ge=0, description="Norm of the order-n_max contribution")
    converged: bool = Field(description="last_order_norm within the configured tolerance")


class LeadingTerm(BaseModel):
    """Lowest nonvanishing order of the commutator expansion of C_jk.

    The norm of the order-n term is (pi**n / n!) * sqrt(g_norm_squared) * (t/tau)**n,
    where g_norm_squared is the exact squared norm of the nested commutator
    G^(n) in units of gamma**n.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: int = Field(ge=1)
    target: int = Field(ge=1)
    order: int = Field(ge=1, description="n = 2L + 1")
    g_norm_squared: Fraction = Field(description="Exact |G^(n)|^2")
    support: List[str] = Field(default_factory=list, description="Surviving Pauli strings")

    @model_validator(mode="after")
    def _check(self) -> "LeadingTerm":
        if self.order % 2 == 0:
            raise ValueError(f"leading order must be odd, got {self.order}")
        if self.g_norm_squared <= 0:
            raise ValueError("leading coefficient must be positive")
        return self

    @property
    def hop_count(self) -> int:
        return (self.order - 1) // 2

    @property
    def rational_squared(self) -> Fraction:
        """(coefficient / pi**n)**2 as an exact rational."""
        return self.g_norm_squared / Fraction(math.factorial(self.order)) ** 2

    @property
    def rational(self) -> Optional[Fraction]:
        """coefficient / pi**n exactly, when that is rational."""
        r = self.rational_squared
        num, den = math.isqrt(r.numerator), math.isqrt(r.denominator)
        if num * num == r.numerator and den * den == r.denominator:
            return Fraction(num, den)
        return None

    @property
    def log_coefficient(self) -> float:
        """Natural log of the norm prefactor (pi**n / n!) * |G^(n)|."""
        g = self.g_norm_squared
        log_g = 0.5 * (math.log(g.numerator) - math.log(g.denominator))
        return self.order * math.log(math.pi) - math.lgamma(self.order + 1) + log_g

    @property
    def log10_coefficient(self) -> float:
        return self.log_coefficient / LN10

    @property
    def coefficient(self) -> float:
        return math.exp(self.log_coefficient)
