"""Command implementations: each turns a RunConfig into a ResultTable."""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import networkx
import numpy
import pydantic
import scipy

from .. import __version__
from ..analytic.asymptotics import chain_asymptotic, chain_exponential_front
from ..analytic.correlations import (
    correlation_analytic,
    finite_difference_velocity,
    general_correlation,
    summary_power_law,
    threshold_time,
)
from ..analytic.fronts import chain_front_snapshot, front_snapshot
from ..analytic.velocity import (
    reduce_angles_3d,
    reduce_angle_2d,
    reduce_direction_2d,
    reduce_direction_3d,
    v_lr_2d,
    v_lr_3d,
    v_lr_chain,
    velocity_profile_2d,
    velocity_profile_3d,
)
from ..constants import (
    EXIT_ENGINE_MISMATCH,
    EXIT_OK,
    LEADING_MATCH_RTOL,
    UNREACHABLE_TOKEN,
    Command,
    Engine,
)
from ..engines.dense import correlation_exact, diagonalize, finite_difference_velocity_exact
from ..engines.series import correlation_series_grid, leading_terms
from ..errors import ConfigError, NetworkParseError, SiteIndexError
from ..network.builders import build_chain, build_lattice
from ..network.loader import load_network
from ..network.paths import group_degenerate_targets, min_path_summaries
from ..schemas.graph import CouplingGraph, LatticeSpec, MinPathSummary
from ..schemas.run import Cell, ResultTable, RunConfig
from ..utils.logspace import LogValue
from ..utils.selectors import parse_coordinate_list, parse_index_list

logger = logging.getLogger(__name__)

Coordinates = Tuple[int, ...]


@dataclass
class ResolvedGraph:
    """The graph a command runs on, with lattice bookkeeping when it has any."""

    graph: CouplingGraph
    lattice: Optional[LatticeSpec] = None
    index: Optional[Dict[Coordinates, int]] = None

    @property
    def is_lattice(self) -> bool:
        return self.lattice is not None and self.lattice.dimension > 1

    @cached_property
    def _coords(self) -> Dict[int, Coordinates]:
        return {q: c for c, q in self.index.items()}

    def label(self, q: int) -> Coordinates:
        """Lattice coordinates of a qubit (plain index for chains and files)."""
        if self.is_lattice:
            return self._coords[q]
        return (q,)

    @property
    def origin(self) -> int:
        return self.index[(0,) * self.lattice.dimension]


def resolve_graph(config: RunConfig) -> ResolvedGraph:
    """Build or load the coupling graph named by the config."""
    source = config.graph
    if source.kind == "chain":
        return ResolvedGraph(graph=build_chain(source.size, config.delta))
    if source.kind == "file":
        path = Path(source.path)
        if not path.exists():
            raise NetworkParseError(f"network file not found: {path}", field="graph")
        return ResolvedGraph(graph=load_network(path.read_text(encoding="utf-8")))
    spec = LatticeSpec(dimension=source.dimension, extent=source.size, delta_over_gamma=config.delta)
    graph, index = build_lattice(spec)
    return ResolvedGraph(graph=graph, lattice=spec, index=index)


def resolve_pair_sites(config: RunConfig, resolved: ResolvedGraph) -> Tuple[int, List[int]]:
    """Reference qubit and target qubits; lattices use the origin and coordinate selectors."""
    n = resolved.graph.qubit_count
    if resolved.is_lattice:
        j = resolved.origin
        if not config.targets:
            return j, list(range(1, n + 1))
        targets = []
        for coords in parse_coordinate_list(config.targets, resolved.lattice.dimension):
            if coords not in resolved.index:
                raise SiteIndexError(f"lattice site {coords} outside the lattice")
            targets.append(resolved.index[coords])
        return j, targets
    j = config.ref
    if not 1 <= j <= n:
        raise SiteIndexError(f"ref={j} outside 1..{n}")
    targets = parse_index_list(config.targets) if config.targets else list(range(1, n + 1))
    for k in targets:
        if not 1 <= k <= n:
            raise SiteIndexError(f"target {k} outside 1..{n}")
    return j, targets


def _site_columns(resolved: ResolvedGraph) -> List[str]:
    if resolved.is_lattice:
        return ["n", "m", "p"][: resolved.lattice.dimension]
    return ["k"]


def _value(value: LogValue, log10: bool) -> float:
    return value.log10 if log10 else value.to_float()


def _linear_or_log10(value: float, log10: bool) -> float:
    if not log10:
        return value
    return math.log10(value) if value > 0 else -math.inf


def build_meta(config: RunConfig, graph: Optional[CouplingGraph] = None) -> Dict[str, object]:
    """Config echo, engine and library versions."""
    meta: Dict[str, object] = {
        "command": config.command.value,
        "engine": config.resolved_engine.value,
        "config": config.echo(),
        "versions": {
            "lrfront": __version__,
            "numpy": numpy.__version__,
            "scipy": scipy.__version__,
            "networkx": networkx.__version__,
            "pydantic": pydantic.VERSION,
        },
    }
    if graph is not None:
        meta["graph_digest"] = graph.digest()
        meta["qubit_count"] = graph.qubit_count
    return meta


def cmd_correlate(config: RunConfig) -> ResultTable:
    """
    Correlation time series for (j, k) pairs.

    exact and series emit linear C by default, analytic emits log10 C;
    compare puts the exact and analytic values side by side with log10 of
    their ratio.
    """
    resolved = resolve_graph(config)
    graph = resolved.graph
    j, targets = resolve_pair_sites(config, resolved)
    times = config.time_grid()
    engine = config.resolved_engine
    log10 = config.use_log10()
    value_name = "log10_C" if log10 else "C"
    site_cols = _site_columns(resolved)

    summaries: Dict[int, MinPathSummary] = {}
    if engine in (Engine.ANALYTIC, Engine.COMPARE):
        summaries = min_path_summaries(graph, j)
    spectrum = diagonalize(graph) if engine in (Engine.EXACT, Engine.COMPARE) else None

    if engine == Engine.COMPARE:
        columns = ["t_over_tau", *site_cols, f"{value_name}_exact", f"{value_name}_analytic", "log10_ratio"]
    elif engine == Engine.SERIES:
        columns = ["t_over_tau", *site_cols, value_name, "last_order_norm"]
    else:
        columns = ["t_over_tau", *site_cols, value_name]

    rows: List[List[Cell]] = []
    for k in targets:
        label = list(resolved.label(k))
        if engine == Engine.EXACT:
            series = correlation_exact(graph, j, k, times, spectrum=spectrum)
            for t, c in zip(series.times, series.values):
                rows.append([t, *label, _linear_or_log10(c, log10)])
        elif engine == Engine.SERIES:
            series = correlation_series_grid(graph, j, k, times, config.order)
            for t, c, last in zip(series.times, series.values, series.last_order_norms):
                rows.append([t, *label, _linear_or_log10(c, log10), last])
        elif engine == Engine.ANALYTIC:
            summary = summaries[k]
            if not summary.reachable:
                rows.extend([t, *label, UNREACHABLE_TOKEN] for t in times)
                continue
            analytic = correlation_analytic(summary, times)
            cells = analytic.log10() if log10 else analytic.values
            rows.extend([t, *label, cell] for t, cell in zip(times, cells))
        else:
            series = correlation_exact(graph, j, k, times, spectrum=spectrum)
            summary = summaries[k]
            if not summary.reachable:
                rows.extend(
                    [t, *label, _linear_or_log10(c, log10), UNREACHABLE_TOKEN, UNREACHABLE_TOKEN]
                    for t, c in zip(series.times, series.values)
                )
                continue
            analytic = correlation_analytic(summary, times)
            analytic_cells = analytic.log10() if log10 else analytic.values
            for t, c, a_log10, a_cell in zip(series.times, series.values, analytic.log10(), analytic_cells):
                ratio = (math.log10(c) - a_log10) if c > 0 and a_log10 > -math.inf else math.nan
                rows.append([t, *label, _linear_or_log10(c, log10), a_cell, ratio])

    logger.info("correlate: %d targets x %d times (%s)", len(targets), len(times), engine.value)
    return ResultTable(columns=columns, rows=rows, meta=build_meta(config, graph))


def _chain_sites(config: RunConfig) -> List[int]:
    if config.sites:
        return parse_index_list(config.sites)
    if config.targets:
        return parse_index_list(config.targets)
    return list(range(1, config.graph.size + 1))


def cmd_front(config: RunConfig) -> ResultTable:
    """
    Closed-form snapshots, one block of (site, log10 C) rows per time.

    Sites above the clip level and sites where C vanishes are omitted, so
    t = 0 yields an empty block.
    """
    if config.resolved_engine != Engine.ANALYTIC:
        raise ConfigError("front snapshots come from the analytic engine only")
    times = config.time_grid()
    log10 = config.use_log10()
    value_name = "log10_C" if log10 else "C"
    source = config.graph
    rows: List[List[Cell]] = []
    graph: Optional[CouplingGraph] = None

    if source.kind == "chain":
        sites = _chain_sites(config)
        columns = ["t_over_tau", "k", value_name]
        if config.asymptotic:
            columns += [f"{value_name}_asymptotic", f"{value_name}_exponential_front"]
        for t in times:
            snapshot = chain_front_snapshot(sites, config.delta, t, config.clip)
            for site in snapshot.sites:
                (k,) = site.coordinates
                row: List[Cell] = [t, k, _from_log10(site.log10_value, log10)]
                if config.asymptotic:
                    row.append(_value(chain_asymptotic(k, config.delta, t), log10))
                    row.append(_value(chain_exponential_front(k, config.delta, t), log10))
                rows.append(row)
    elif source.kind == "file":
        resolved = resolve_graph(config)
        graph = resolved.graph
        j, targets = resolve_pair_sites(config, resolved)
        summaries = min_path_summaries(graph, j)
        columns = ["t_over_tau", "k", value_name]
        for t in times:
            for k in targets:
                summary = summaries[k]
                if not summary.reachable:
                    continue
                v = general_correlation(summary, t)
                if v.is_zero or v.log10 > config.clip:
                    continue
                rows.append([t, k, _value(v, log10)])
    else:
        spec = LatticeSpec(dimension=source.dimension, extent=source.size, delta_over_gamma=config.delta)
        columns = ["t_over_tau", *["n", "m", "p"][: spec.dimension], value_name]
        for t in times:
            snapshot = front_snapshot(spec, config.delta, t, config.clip)
            for site in snapshot.sites:
                rows.append([t, *site.coordinates, _from_log10(site.log10_value, log10)])

    logger.info("front: %d rows over %d times", len(rows), len(times))
    meta = build_meta(config, graph)
    meta["clip_log10"] = config.clip
    return ResultTable(columns=columns, rows=rows, meta=meta)


def _from_log10(value: float, log10: bool) -> float:
    return value if log10 else 10.0 ** value


def _parse_angles(config: RunConfig, dimension: int) -> List[Tuple[float, ...]]:
    scale = math.pi / 180.0 if config.degrees else 1.0
    directions = []
    for item in config.angles.split(","):
        parts = [p for p in item.strip().split(":") if p]
        if len(parts) != (1 if dimension == 2 else 2):
            raise NetworkParseError(f"expected {'theta' if dimension == 2 else 'theta:phi'}, got {item!r}", field="angles")
        try:
            directions.append(tuple(float(p) * scale for p in parts))
        except ValueError:
            raise NetworkParseError(f"cannot read angle {item!r}", field="angles")
    return directions


def _velocity_profile(config: RunConfig, dimension: int) -> ResultTable:
    unit = 180.0 / math.pi if config.degrees else 1.0
    v_chain = v_lr_chain(config.delta)
    if config.angles:
        rows: List[List[Cell]] = []
        for direction in _parse_angles(config, dimension):
            if dimension == 2:
                theta = reduce_angle_2d(direction[0])
                rows.append([theta * unit, v_lr_2d(theta, config.delta), v_chain])
            else:
                theta, phi = reduce_angles_3d(*direction)
                rows.append([theta * unit, phi * unit, v_lr_3d(theta, phi, config.delta), v_chain])
    else:
        profile = (
            velocity_profile_2d(config.delta, config.steps)
            if dimension == 2
            else velocity_profile_3d(config.delta, config.steps)
        )
        rows = []
        for p in profile.points:
            angles = [p.theta * unit] if dimension == 2 else [p.theta * unit, p.phi * unit]
            rows.append([*angles, p.velocity, v_chain])
    columns = ["theta", "v_lr", "v_lr_chain"] if dimension == 2 else ["theta", "phi", "v_lr", "v_lr_chain"]
    meta = build_meta(config)
    meta["angle_unit"] = "degrees" if config.degrees else "radians"
    return ResultTable(columns=columns, rows=rows, meta=meta)


def _ray_sites(config: RunConfig, spec: LatticeSpec) -> Tuple[List[Coordinates], float, float]:
    """Sites i*d along the ray d (i = 0, 1, ...), the Euclidean step and the reference velocity."""
    if not config.ray:
        raise ConfigError("lattice velocity studies need --ray (e.g. 1:1)")
    (step,) = parse_coordinate_list(config.ray, spec.dimension)
    reach = max(abs(c) for c in step)
    if reach == 0:
        raise ConfigError("ray direction cannot be zero")
    sites = [tuple(i * c for c in step) for i in range(spec.extent // reach + 1)]
    length = math.sqrt(sum(c * c for c in step))
    if spec.dimension == 2:
        reference = v_lr_2d(reduce_direction_2d(*step), config.delta)
    else:
        reference = v_lr_3d(*reduce_direction_3d(*step), config.delta)
    return sites, length, reference


def _network_velocity_targets(graph: CouplingGraph, j: int, c_thresh: float) -> List[int]:
    """Default network targets: one qubit per degenerate group, by leading-order crossing time.

    Qubits with coinciding early-time curves cross together, so only the
    first of each group is kept.
    """
    summaries = min_path_summaries(graph, j)
    groups = group_degenerate_targets(graph, j)
    collapsed = [group for group in groups if len(group) > 1]
    if collapsed:
        logger.info("velocity: collapsed degenerate targets %s", collapsed)
    return sorted((group[0] for group in groups), key=lambda k: threshold_time(summaries[k], 1.0, c_thresh))


def cmd_velocity(config: RunConfig) -> ResultTable:
    """
    Front velocities.

    With --profile, v_LR against direction. Otherwise threshold crossings
    along a chain, a network's target list or a lattice ray, with the
    backwards finite-difference velocity and the closed-form v_LR as a
    reference column.
    """
    if config.profile:
        return _velocity_profile(config, 2 if config.profile == "2d" else 3)

    engine = config.resolved_engine
    if engine not in (Engine.ANALYTIC, Engine.EXACT):
        raise ConfigError("velocity studies use the analytic or exact engine")
    source = config.graph
    graph: Optional[CouplingGraph] = None
    columns = ["k", "t_over_tau", "v_k", "v_lr"]

    if source.kind == "file" or (source.kind == "chain" and engine == Engine.EXACT):
        resolved = resolve_graph(config)
        graph = resolved.graph
        j, targets = resolve_pair_sites(config, resolved)
        if source.kind == "file" and not config.targets:
            targets = _network_velocity_targets(graph, j, config.cthresh)
        if engine == Engine.EXACT:
            crossings = finite_difference_velocity_exact(graph, j, targets, config.cthresh, config.tmax)
        else:
            summaries = min_path_summaries(graph, j)
            crossings = finite_difference_velocity([summaries[k] for k in targets], config.delta, config.cthresh)
        reference = v_lr_chain(config.delta) if source.kind == "chain" else None
        rows = [[c.site[0], c.t_over_tau, c.velocity, reference] for c in crossings]
    elif source.kind == "chain":
        crossings = finite_difference_velocity(_chain_sites(config), config.delta, config.cthresh)
        reference = v_lr_chain(config.delta)
        rows = [[c.site[0], c.t_over_tau, c.velocity, reference] for c in crossings]
    else:
        if engine != Engine.ANALYTIC:
            raise ConfigError("lattice velocity studies use the analytic engine")
        spec = LatticeSpec(dimension=source.dimension, extent=source.size, delta_over_gamma=config.delta)
        sites, length, reference = _ray_sites(config, spec)
        crossings = finite_difference_velocity(sites, config.delta, config.cthresh)
        columns = [*["n", "m", "p"][: spec.dimension], "t_over_tau", "v_k", "v_lr"]
        rows = [
            [*c.site, c.t_over_tau, None if c.velocity is None else c.velocity * length, reference]
            for c in crossings
        ]

    meta = build_meta(config, graph)
    meta["c_thresh"] = config.cthresh
    return ResultTable(columns=columns, rows=rows, meta=meta)


def cmd_leading(config: RunConfig) -> ResultTable:
    """
    Leading-order structure per pair: hop count, order 2L+1, path count
    and log10 of the norm prefactor, symbolic against closed form.

    Any disagreement is flagged in the match column and sets the engine
    mismatch exit status.
    """
    resolved = resolve_graph(config)
    graph = resolved.graph
    j, targets = resolve_pair_sites(config, resolved)
    summaries = min_path_summaries(graph, j)
    reachable = [k for k in targets if summaries[k].reachable]
    terms = leading_terms(graph, j, reachable)

    columns = ["j", *_site_columns(resolved), "L", "order", "path_count",
               "log10_prefactor_symbolic", "log10_prefactor_analytic", "match"]
    rows: List[List[Cell]] = []
    exit_code = EXIT_OK
    for k in targets:
        label = list(resolved.label(k))
        summary = summaries[k]
        if not summary.reachable:
            rows.append([j, *label, UNREACHABLE_TOKEN, UNREACHABLE_TOKEN, 0,
                         UNREACHABLE_TOKEN, UNREACHABLE_TOKEN, UNREACHABLE_TOKEN])
            continue
        term = terms[k]
        analytic = summary_power_law(summary)
        symbolic_log10 = term.log10_coefficient
        relative = abs(math.expm1(term.log_coefficient - analytic.log_prefactor))
        match = term.order == summary.leading_order and relative <= LEADING_MATCH_RTOL
        if not match:
            exit_code = EXIT_ENGINE_MISMATCH
            logger.warning(
                "leading order mismatch for (%d,%d): order %d vs %d, relative %.3g",
                j, k, term.order, summary.leading_order, relative,
            )
        rows.append([j, *label, summary.hop_count, term.order, summary.path_count,
                     symbolic_log10, analytic.log10_prefactor, "true" if match else "false"])

    return ResultTable(columns=columns, rows=rows, meta=build_meta(config, graph), exit_code=exit_code)


COMMANDS: Dict[Command, Callable[[RunConfig], ResultTable]] = {
    Command.CORRELATE: cmd_correlate,
    Command.FRONT: cmd_front,
    Command.VELOCITY: cmd_velocity,
    Command.LEADING: cmd_leading,
}


def run_command(config: RunConfig) -> ResultTable:
    """Dispatch a configured command."""
    return COMMANDS[config.command](config)
