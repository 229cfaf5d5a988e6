"""Graph schemas - coupling networks, lattice descriptions and path summaries."""

import hashlib
from typing import Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.logspace import LogValue


class CouplingGraph(BaseModel):
    """Qubit network with a transverse energy and symmetric ZZ couplings.

    Couplings are stored once per unordered pair as (j, k) with j < k, as
    the ratio Delta_jk / gamma; every energy is in units of gamma.
    """

    model_config = ConfigDict(frozen=True)

    qubit_count: int = Field(ge=1, description="Number of qubits")
    gamma: float = Field(default=1.0, gt=0, description="Transverse energy (documentation only)")
    couplings: Dict[Tuple[int, int], float] = Field(
        default_factory=dict,
        description="(j, k) with j < k -> Delta_jk / gamma, never zero",
    )

    @model_validator(mode="after")
    def _check_couplings(self) -> "CouplingGraph":
        for (j, k), delta in self.couplings.items():
            if j == k:
                raise ValueError(f"self-coupling on qubit {j}")
            if j > k:
                raise ValueError(f"coupling ({j},{k}) must be stored with j < k")
            if not (1 <= j <= self.qubit_count and 1 <= k <= self.qubit_count):
                raise ValueError(f"coupling ({j},{k}) outside 1..{self.qubit_count}")
            if delta == 0:
                raise ValueError(f"coupling ({j},{k}) is zero; omit absent edges")
        return self

    @property
    def edge_count(self) -> int:
        return len(self.couplings)

    def coupling(self, j: int, k: int) -> float:
        """Delta_jk / gamma, 0.0 when absent."""
        if j > k:
            j, k = k, j
        return self.couplings.get((j, k), 0.0)

    def neighbors(self) -> Dict[int, Tuple[int, ...]]:
        adj: Dict[int, list] = {q: [] for q in range(1, self.qubit_count + 1)}
        for j, k in self.couplings:
            adj[j].append(k)
            adj[k].append(j)
        return {q: tuple(sorted(v)) for q, v in adj.items()}

    def digest(self) -> str:
        """Short content hash used to tag results."""
        text = f"{self.qubit_count}|{self.gamma!r}|" + ";".join(
            f"{j},{k},{d!r}" for (j, k), d in sorted(self.couplings.items())
        )
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


class LatticeSpec(BaseModel):
    """Hypercubic lattice with indices -N..N on each axis and the reference at the origin."""

    dimension: Literal[1, 2, 3]
    extent: int = Field(ge=1, description="N: coordinates run from -N to N")
    delta_over_gamma: float = Field(default=1.0, gt=0)

    @property
    def side(self) -> int:
        return 2 * self.extent + 1

    @property
    def site_count(self) -> int:
        return self.side ** self.dimension


class MinPathSummary(BaseModel):
    """Minimum hop count between two qubits and the squared path-weight sum over all minimum paths."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: int = Field(ge=1)
    target: int = Field(ge=1)
    hop_count: Optional[int] = Field(default=None, ge=0, description="L, or None when unreachable")
    weight_sum: LogValue = Field(
        default_factory=LogValue.zero,
        description="sum over minimum paths of prod (Delta/gamma)^2",
    )
    path_count: Optional[int] = Field(default=None, ge=0)

    @field_validator("weight_sum")
    @classmethod
    def _nonnegative(cls, value: LogValue) -> LogValue:
        if value.sign < 0:
            raise ValueError("weight_sum cannot be negative")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "MinPathSummary":
        if self.hop_count is None:
            if not self.weight_sum.is_zero:
                raise ValueError("unreachable summary must carry a zero weight_sum")
        else:
            if self.weight_sum.is_zero:
                raise ValueError("reachable summary must carry a positive weight_sum")
            if (self.hop_count == 0) != (self.source == self.target):
                raise ValueError("L = 0 exactly when source == target")
        return self

    @property
    def reachable(self) -> bool:
        return self.hop_count is not None

    @property
    def leading_order(self) -> Optional[int]:
        """2L + 1, the first nonzero power of t/tau."""
        return None if self.hop_count is None else 2 * self.hop_count + 1
