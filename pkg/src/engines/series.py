"""Series engine - nested-commutator expansion of C_jk(t).

With s = t/tau and energies in units of gamma,

    sigma_z^(j)(t) = sum_n (i*pi*s)**n / n! * D_n,   D_0 = sigma_z^(j),  D_n = [H, D_{n-1}],

so the order-n contribution to [sigma_z^(j)(t), sigma_z^(k)] is
(i*pi*s)**n / n! * G_n with G_n = [D_n, sigma_z^(k)].
"""

import logging
import math
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from scipy.optimize import brentq

from ..config import get_settings
from ..constants import (
    CROSSING_EXTRA_ORDERS,
    CROSSING_MAX_EXTRA_ORDERS,
    CROSSING_SERIES_RTOL,
    Engine,
)
from ..errors import CapExceededError, ConfigError, LRFrontError, SiteIndexError, UnreachablePairError
from ..network.builders import hamiltonian, sigma_z
from ..network.paths import min_path_summaries, min_path_summary
from ..operators.sums import OperatorSum, commutator_sum
from ..schemas.graph import CouplingGraph
from ..schemas.series import CorrelationSeries, LeadingTerm, SeriesEvaluation

logger = logging.getLogger(__name__)


class CommutatorExpansion:
    """Iterates D_n = [H, D_{n-1}] from D_0 = sigma_z^(j), enforcing the stored-term cap."""

    def __init__(
        self,
        graph: CouplingGraph,
        j: int,
        *,
        exact: bool = False,
        max_terms: Optional[int] = None,
    ):
        if not 1 <= j <= graph.qubit_count:
            raise SiteIndexError(f"j={j} outside 1..{graph.qubit_count}")
        self.graph = graph
        self.j = j
        self.exact = exact
        self.max_terms = get_settings().max_pauli_terms if max_terms is None else max_terms
        self._hamiltonian = hamiltonian(graph, exact=exact)
        self._orders: List[OperatorSum] = [sigma_z(j, graph.qubit_count, exact=exact)]

    def order(self, n: int) -> OperatorSum:
        """D_n, computing and caching intermediate orders."""
        while len(self._orders) <= n:
            nxt = commutator_sum(self._hamiltonian, self._orders[-1])
            if len(nxt) > self.max_terms:
                logger.warning(
                    "series order %d needs %d Pauli terms (cap %d)", len(self._orders), len(nxt), self.max_terms
                )
                raise CapExceededError("stored Pauli terms", len(nxt), self.max_terms)
            logger.debug("D_%d: %d terms", len(self._orders), len(nxt))
            self._orders.append(nxt)
        return self._orders[n]

    def __iter__(self) -> Iterator[OperatorSum]:
        n = 0
        while True:
            yield self.order(n)
            n += 1

    def commutator_with_z(self, n: int, k: int) -> OperatorSum:
        """G_n = [D_n, sigma_z^(k)]."""
        if not 1 <= k <= self.graph.qubit_count:
            raise SiteIndexError(f"k={k} outside 1..{self.graph.qubit_count}")
        return commutator_sum(self.order(n), sigma_z(k, self.graph.qubit_count, exact=self.exact))


def _order_factor(n: int, s: float) -> complex:
    return (1j * math.pi * s) ** n / math.factorial(n)


def _norm(acc: Dict[Tuple[int, int], complex]) -> float:
    return math.sqrt(math.fsum(c.real * c.real + c.imag * c.imag for c in acc.values()))


def correlation_series_grid(
    graph: CouplingGraph,
    j: int,
    k: int,
    times: Sequence[float],
    n_max: int,
    *,
    max_terms: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> CorrelationSeries:
    """Truncated series on a time grid; the commutators are built once."""
    if n_max < 1:
        raise LRFrontError(f"n_max must be at least 1, got {n_max}")
    tolerance = get_settings().series_tolerance if tolerance is None else tolerance
    expansion = CommutatorExpansion(graph, j, max_terms=max_terms)
    orders = [list(expansion.commutator_with_z(n, k).items()) for n in range(1, n_max + 1)]

    values: List[float] = []
    last_norms: List[float] = []
    for s in times:
        acc: Dict[Tuple[int, int], complex] = {}
        last: Dict[Tuple[int, int], complex] = {}
        for n, terms in enumerate(orders, 1):
            factor = _order_factor(n, s)
            for key, coeff in terms:
                acc[key] = acc.get(key, 0j) + factor * coeff
                if n == n_max:
                    last[key] = factor * coeff
        values.append(_norm(acc))
        last_norms.append(_norm(last))

    worst = max(last_norms, default=0.0)
    if worst > tolerance:
        logger.warning(
            "series C_%d%d truncated at order %d: last order reaches %.3g (tolerance %.1g)",
            j, k, n_max, worst, tolerance,
        )
    return CorrelationSeries(
        engine=Engine.SERIES,
        source=j,
        target=k,
        times=list(times),
        values=values,
        graph_digest=graph.digest(),
        truncation_order=n_max,
        last_order_norms=last_norms,
    )


def correlation_series(
    graph: CouplingGraph,
    j: int,
    k: int,
    t_over_tau: float,
    n_max: int,
    *,
    max_terms: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> SeriesEvaluation:
    """Norm of sum_{n <= n_max} C^(n) (t/tau)**n with its truncation diagnostic."""
    tolerance = get_settings().series_tolerance if tolerance is None else tolerance
    series = correlation_series_grid(
        graph, j, k, [t_over_tau], n_max, max_terms=max_terms, tolerance=tolerance
    )
    last = series.last_order_norms[0]
    return SeriesEvaluation(
        value=series.values[0], order=n_max, last_order_norm=last, converged=last <= tolerance
    )


class RelativeSeries:
    """C_jk(t) summed from the leading order 2L+1 upwards, in log space.

    Orders below 2L+1 vanish identically and are skipped, so float residues
    of cancelled terms never enter, and scaling every order by the leading
    one keeps full relative precision far below the dense engine's
    absolute floor of about 1e-13.
    """

    def __init__(
        self,
        graph: CouplingGraph,
        j: int,
        k: int,
        *,
        extra_orders: int = CROSSING_EXTRA_ORDERS,
        max_terms: Optional[int] = None,
    ):
        summary = min_path_summary(graph, j, k)
        if not summary.reachable:
            raise UnreachablePairError(j, k)
        self.j = j
        self.k = k
        self.leading_order = summary.leading_order
        self._expansion = CommutatorExpansion(graph, j, max_terms=max_terms)
        # order n0 + m stored as G_{n0+m} * n0!/(n0+m)!
        self._orders: List[List[Tuple[Tuple[int, int], complex]]] = []
        self._norms: List[float] = []
        self.extend(extra_orders)
        if self._norms[0] == 0.0:
            raise LRFrontError(f"order {self.leading_order} of C_{j}{k} vanishes")

    @property
    def extra_orders(self) -> int:
        return len(self._orders) - 1

    @property
    def log_leading_norm(self) -> float:
        """ln ||G_{2L+1}||."""
        return math.log(self._norms[0])

    def extend(self, extra_orders: int) -> None:
        """Sum orders up to 2L+1+extra_orders."""
        n0 = self.leading_order
        while len(self._orders) <= extra_orders:
            n = n0 + len(self._orders)
            weight = math.exp(math.lgamma(n0 + 1) - math.lgamma(n + 1))
            terms = [(key, weight * c) for key, c in self._expansion.commutator_with_z(n, self.k).items()]
            self._orders.append(terms)
            self._norms.append(_norm(dict(terms)))

    def log_value(self, t_over_tau: float) -> Tuple[float, float]:
        """ln C at t/tau > 0 and the relative size of the last summed order."""
        if t_over_tau <= 0:
            raise LRFrontError("relative series needs t/tau > 0")
        x = math.pi * t_over_tau
        acc: Dict[Tuple[int, int], complex] = {}
        for m, terms in enumerate(self._orders):
            factor = (1j * x) ** m
            for key, coeff in terms:
                acc[key] = acc.get(key, 0j) + factor * coeff
        scaled = _norm(acc)
        if scaled == 0.0:
            return -math.inf, math.inf
        n0 = self.leading_order
        log_c = n0 * math.log(x) - math.lgamma(n0 + 1) + math.log(scaled)
        return log_c, x ** self.extra_orders * self._norms[-1] / scaled


def _bracket_crossing(series: RelativeSeries, log_thresh: float, t_max: float) -> float:
    def excess(s: float) -> float:
        return series.log_value(s)[0] - log_thresh

    n0 = series.leading_order
    guess = math.exp((log_thresh - series.log_leading_norm + math.lgamma(n0 + 1)) / n0) / math.pi
    hi = min(2.0 * guess, t_max)
    while excess(hi) < 0:
        if hi >= t_max:
            raise LRFrontError(
                f"C_{series.j}{series.k} stays below {math.exp(log_thresh):g} up to t/tau = {t_max:g}"
            )
        hi = min(2.0 * hi, t_max)
    lo = 0.5 * hi
    while excess(lo) >= 0:
        lo *= 0.5
        if lo < 1e-300:
            raise LRFrontError(f"no crossing bracket for C_{series.j}{series.k}")
    return float(brentq(excess, lo, hi, xtol=1e-15 * hi, rtol=1e-12))


def threshold_time_series(
    graph: CouplingGraph,
    j: int,
    k: int,
    c_thresh: float,
    t_max: float,
    *,
    rtol: float = CROSSING_SERIES_RTOL,
    max_terms: Optional[int] = None,
) -> float:
    """First t/tau at which C_jk reaches c_thresh, from the relative series.

    Orders past the leading one are added until the last of them falls
    below ``rtol`` of C at the crossing; a crossing the series cannot
    resolve within CROSSING_MAX_EXTRA_ORDERS raises ConfigError.
    """
    if c_thresh <= 0:
        raise LRFrontError("c_thresh must be positive")
    series = RelativeSeries(graph, j, k, max_terms=max_terms)
    log_thresh = math.log(c_thresh)
    while True:
        t = _bracket_crossing(series, log_thresh, t_max)
        relative = series.log_value(t)[1]
        logger.debug(
            "series crossing C_%d%d at t/tau=%.6g with %d extra orders (last %.2g)",
            j, k, t, series.extra_orders, relative,
        )
        if relative <= rtol:
            return t
        if series.extra_orders >= CROSSING_MAX_EXTRA_ORDERS:
            raise ConfigError(
                f"C_{j}{k} = {c_thresh:g} is below the dense floor and the series has not converged "
                f"at t/tau = {t:.3g} after {series.extra_orders} orders past the leading one; "
                "raise --cthresh or use the analytic engine"
            )
        series.extend(min(max(2 * series.extra_orders, series.extra_orders + 2), CROSSING_MAX_EXTRA_ORDERS))


def leading_terms(
    graph: CouplingGraph,
    j: int,
    targets: Sequence[int],
    *,
    max_terms: Optional[int] = None,
) -> Dict[int, LeadingTerm]:
    """Leading terms for several targets sharing one exact expansion from j.

    Raises UnreachablePairError for the first target with no path from j.
    """
    summaries = min_path_summaries(graph, j)
    for k in targets:
        if not 1 <= k <= graph.qubit_count:
            raise SiteIndexError(f"k={k} outside 1..{graph.qubit_count}")
        if not summaries[k].reachable:
            raise UnreachablePairError(j, k)

    expansion = CommutatorExpansion(graph, j, exact=True, max_terms=max_terms)
    result: Dict[int, LeadingTerm] = {}
    for k in targets:
        bound = summaries[k].leading_order
        for n in range(1, bound + 1):
            g = expansion.commutator_with_z(n, k)
            if g.is_zero:
                continue
            result[k] = LeadingTerm(
                source=j,
                target=k,
                order=n,
                g_norm_squared=g.norm_squared(),
                support=sorted(p.label for p in g.terms),
            )
            break
        else:
            raise LRFrontError(f"no nonzero order up to {bound} for C_{j}{k}")
    return result


def leading_term(
    graph: CouplingGraph,
    j: int,
    k: int,
    *,
    max_terms: Optional[int] = None,
) -> LeadingTerm:
    """Lowest nonvanishing order of C_jk with its exact norm coefficient."""
    return leading_terms(graph, j, [k], max_terms=max_terms)[k]
