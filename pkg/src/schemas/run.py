"""Run schemas - command configuration and result tables."""

from typing import Any, Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..constants import (
    DEFAULT_CLIP_LOG10,
    EXIT_OK,
    TIME_CONVENTION,
    Command,
    Engine,
    OutputFormat,
)
from ..errors import NetworkParseError, TimeGridError
from ..utils.selectors import parse_graph_source

Cell = Union[float, int, str, None]


class GraphSource(BaseModel):
    """Where the coupling graph comes from: a builtin family or a network file."""

    kind: Literal["chain", "lattice2d", "lattice3d", "file"]
    size: Optional[int] = Field(
        default=None,
        ge=1,
        description="Qubit count for chains, extent N for lattices",
    )
    path: Optional[str] = Field(default=None, description="Network file path")

    @model_validator(mode="after")
    def _one_source(self) -> "GraphSource":
        if self.kind == "file":
            if not self.path or self.size is not None:
                raise ValueError("a file source needs a path and nothing else")
        elif self.size is None or self.path is not None:
            raise ValueError(f"a {self.kind} source needs a size and no path")
        return self

    @classmethod
    def from_text(cls, text: str) -> "GraphSource":
        kind, arg = parse_graph_source(text)
        if kind == "file":
            return cls(kind=kind, path=arg)
        try:
            size = int(arg)
        except ValueError:
            raise NetworkParseError(f"{kind} size must be an integer, got {arg!r}", field="graph")
        return cls(kind=kind, size=size)

    @property
    def dimension(self) -> Optional[int]:
        """Lattice dimension (1 for chains), None for network files."""
        return {"chain": 1, "lattice2d": 2, "lattice3d": 3}.get(self.kind)

    def __str__(self) -> str:
        return f"{self.kind}:{self.path if self.kind == 'file' else self.size}"


class RunConfig(BaseModel):
    """Everything needed to re-run one command."""

    command: Command
    graph: GraphSource
    engine: Optional[Engine] = Field(
        default=None,
        description="Defaults to exact for correlate, analytic otherwise",
    )
    delta: float = Field(default=1.0, gt=0, description="Delta/gamma for builtin graphs")
    ref: int = Field(default=1, ge=1, description="Reference qubit j (network files and chains)")
    targets: Optional[str] = Field(
        default=None,
        description="Site selector: '1,3,5-9' or lattice coordinates '2:1,3:3'",
    )
    tmin: float = Field(default=0.0)
    tmax: float = Field(default=0.1)
    tsteps: int = Field(default=50, ge=1)
    tlog: bool = Field(default=False, description="Log-spaced time grid")
    order: int = Field(default=12, ge=1, description="Series truncation order n_max")
    cthresh: float = Field(default=1e-25, gt=0, description="Threshold correlation level")
    clip: float = Field(default=DEFAULT_CLIP_LOG10, description="Snapshot clip level, log10")
    format: OutputFormat = Field(default=OutputFormat.CSV)
    out: Optional[str] = Field(default=None, description="Output path; standard output when absent")
    log10: Optional[bool] = Field(
        default=None,
        description="Force log10 (True) or linear (False) values; engine default when None",
    )
    profile: Optional[Literal["2d", "3d"]] = Field(
        default=None,
        description="Angular velocity profile instead of a saturation study",
    )
    steps: int = Field(default=64, ge=1, description="Angle steps of a velocity profile")
    angles: Optional[str] = Field(
        default=None,
        description="Directions 'theta[:phi],...' at which to evaluate v_LR",
    )
    degrees: bool = Field(default=False, description="Angles given and reported in degrees")
    ray: Optional[str] = Field(
        default=None,
        description="Lattice step along which threshold crossings are taken, e.g. '1:1'",
    )
    sites: Optional[str] = Field(default=None, description="Chain site range for snapshots, e.g. '10250-10450'")
    asymptotic: bool = Field(default=False, description="Add asymptotic comparison columns to chain snapshots")

    @property
    def resolved_engine(self) -> Engine:
        if self.engine is not None:
            return self.engine
        return Engine.EXACT if self.command == Command.CORRELATE else Engine.ANALYTIC

    def use_log10(self) -> bool:
        """log10 output by default for analytic results, linear for engine results."""
        if self.log10 is not None:
            return self.log10
        return self.resolved_engine == Engine.ANALYTIC

    def time_grid(self) -> List[float]:
        """The t/tau grid; nonempty, nonnegative and strictly increasing."""
        if self.tmin < 0 or self.tmax < 0:
            raise TimeGridError("times must be nonnegative")
        if self.tsteps == 1:
            return [float(self.tmin)]
        if self.tmax <= self.tmin:
            raise TimeGridError(f"tmax ({self.tmax}) must exceed tmin ({self.tmin})")
        if self.tlog:
            if self.tmin <= 0:
                raise TimeGridError("a log-spaced grid needs tmin > 0")
            grid = np.geomspace(self.tmin, self.tmax, self.tsteps)
        else:
            grid = np.linspace(self.tmin, self.tmax, self.tsteps)
        times = [float(t) for t in grid]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise TimeGridError("time grid is not strictly increasing at float precision")
        return times

    def echo(self) -> Dict[str, Any]:
        """Config echo for result metadata."""
        data = self.model_dump(mode="json")
        data["graph"] = str(self.graph)
        data["engine"] = self.resolved_engine.value
        return data

    @classmethod
    def from_echo(cls, data: Dict[str, Any]) -> "RunConfig":
        """Rebuild the config recorded in a table's metadata."""
        values = dict(data)
        values["graph"] = GraphSource.from_text(values["graph"])
        return cls(**values)


class ResultTable(BaseModel):
    """Rectangular table of numbers with a metadata block."""

    columns: List[str]
    rows: List[List[Cell]] = Field(default_factory=list)
    meta: Dict[str, Any] = Field(default_factory=dict)
    exit_code: int = Field(default=EXIT_OK, description="Process status the table implies")

    @model_validator(mode="after")
    def _rectangular(self) -> "ResultTable":
        width = len(self.columns)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} cells, expected {width}")
        self.meta.setdefault("time_convention", TIME_CONVENTION)
        return self

    def column(self, name: str) -> List[Cell]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]
