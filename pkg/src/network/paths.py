"""Minimum-path analysis on coupling graphs.

The minimum path between two qubits is the minimum hop count through
nonzero couplings; couplings only weight the paths of that length. Path
weight sums are built by dynamic programming over breadth-first layers,
so they stay cheap when the number of paths grows combinatorially.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import networkx as nx

from ..config import get_settings
from ..errors import CapExceededError, SiteIndexError
from ..schemas.graph import CouplingGraph, MinPathSummary
from ..utils.logspace import LogValue

logger = logging.getLogger(__name__)


def to_networkx(graph: CouplingGraph) -> nx.Graph:
    """Undirected networkx view with ``delta`` and ``log_weight`` edge attributes."""
    g = nx.Graph()
    g.add_nodes_from(range(1, graph.qubit_count + 1))
    for (j, k), delta in graph.couplings.items():
        g.add_edge(j, k, delta=delta, log_weight=2.0 * math.log(abs(delta)))
    return g


def _check_site(graph: CouplingGraph, q: int, name: str) -> None:
    if not 1 <= q <= graph.qubit_count:
        raise SiteIndexError(f"{name}={q} outside 1..{graph.qubit_count}")


def min_path_summaries(graph: CouplingGraph, j: int) -> Dict[int, MinPathSummary]:
    """Summaries from qubit j to every qubit of the graph, unreachable ones included."""
    _check_site(graph, j, "j")
    g = to_networkx(graph)
    distance = nx.single_source_shortest_path_length(g, j)

    layers: Dict[int, List[int]] = {}
    for node, d in distance.items():
        layers.setdefault(d, []).append(node)

    weight: Dict[int, LogValue] = {j: LogValue.one()}
    count: Dict[int, int] = {j: 1}
    for d in range(1, len(layers)):
        for node in layers[d]:
            terms = []
            paths = 0
            for prev in g.neighbors(node):
                if distance.get(prev) != d - 1:
                    continue
                terms.append(weight[prev].scaled_log(g.edges[prev, node]["log_weight"]))
                paths += count[prev]
            weight[node] = LogValue.sum(terms)
            count[node] = paths

    summaries = {}
    for k in range(1, graph.qubit_count + 1):
        if k in distance:
            summaries[k] = MinPathSummary(
                source=j, target=k, hop_count=distance[k], weight_sum=weight[k], path_count=count[k]
            )
        else:
            summaries[k] = MinPathSummary(source=j, target=k)
    logger.debug(
        "min paths from %d: %d reachable of %d, depth %d",
        j, len(distance), graph.qubit_count, len(layers) - 1,
    )
    return summaries


def min_path_summary(graph: CouplingGraph, j: int, k: int) -> MinPathSummary:
    """Hop count L, path count and sum over minimum paths of prod (Delta/gamma)^2."""
    _check_site(graph, j, "j")
    _check_site(graph, k, "k")
    return min_path_summaries(graph, j)[k]


def enumerate_min_paths(
    graph: CouplingGraph,
    j: int,
    k: int,
    cap: Optional[int] = None,
) -> List[List[int]]:
    """Every minimum-length path from j to k, each exactly once.

    Refuses (CapExceededError) as soon as more than ``cap`` paths would be
    produced; the summary's exact path count is checked first.
    """
    _check_site(graph, j, "j")
    _check_site(graph, k, "k")
    cap = get_settings().path_enumeration_cap if cap is None else cap
    summary = min_path_summary(graph, j, k)
    if not summary.reachable:
        return []
    if summary.path_count > cap:
        logger.warning("path enumeration %d->%d refused: %d paths", j, k, summary.path_count)
        raise CapExceededError("minimum paths", summary.path_count, cap)

    paths = []
    for path in nx.all_shortest_paths(to_networkx(graph), j, k):
        paths.append(list(path))
        if len(paths) > cap:
            raise CapExceededError("minimum paths", len(paths), cap)
    return paths


def path_weight(graph: CouplingGraph, path: Sequence[int]) -> LogValue:
    """prod over the path's edges of (Delta/gamma)^2."""
    total = LogValue.one()
    for a, b in zip(path, path[1:]):
        delta = graph.coupling(a, b)
        if delta == 0:
            raise SiteIndexError(f"({a},{b}) is not an edge")
        total = total.scaled_log(2.0 * math.log(abs(delta)))
    return total


def group_degenerate_targets(
    graph: CouplingGraph,
    j: int,
    *,
    log_tol: float = 1e-9,
) -> List[List[int]]:
    """Targets whose leading-order correlations coincide.

    Two targets share a group when they have the same hop count and equal
    natural-log weight sums within ``log_tol`` (an absolute tolerance on
    ln W, so a relative one on W); their early-time curves then overlap.
    Unreachable targets are left out. Groups are ordered by hop count and
    then by first member.
    """
    summaries = [s for s in min_path_summaries(graph, j).values() if s.reachable]
    groups: List[List[MinPathSummary]] = []
    for s in sorted(summaries, key=lambda s: (s.hop_count, s.target)):
        for group in groups:
            head = group[0]
            if head.hop_count == s.hop_count and math.isclose(
                head.weight_sum.log_magnitude, s.weight_sum.log_magnitude, rel_tol=0.0, abs_tol=log_tol
            ):
                group.append(s)
                break
        else:
            groups.append([s])
    return [[s.target for s in group] for group in groups]
