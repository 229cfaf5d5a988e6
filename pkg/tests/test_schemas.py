"""Tests for Pydantic schemas."""

import math
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.constants import Command, Engine
from src.errors import NetworkParseError, TimeGridError
from src.schemas.analytic import FrontSnapshot, SiteValue, VelocityPoint, VelocityProfile
from src.schemas.graph import CouplingGraph, LatticeSpec, MinPathSummary
from src.schemas.run import GraphSource, ResultTable, RunConfig
from src.schemas.series import CorrelationSeries, LeadingTerm
from src.utils.logspace import LogValue


class TestCouplingGraph:
    """Tests for CouplingGraph schema."""

    def test_create_graph(self):
        """Test creating a small graph."""
        graph = CouplingGraph(qubit_count=3, couplings={(1, 2): 0.5, (2, 3): -1.0})

        assert graph.edge_count == 2
        assert graph.coupling(2, 1) == 0.5
        assert graph.coupling(1, 3) == 0.0
        assert graph.neighbors()[2] == (1, 3)

    def test_rejects_reversed_pairs(self):
        """Test that pairs are stored with j < k."""
        with pytest.raises(ValidationError):
            CouplingGraph(qubit_count=3, couplings={(2, 1): 0.5})

    def test_rejects_zero_coupling(self):
        """Test that absent edges are omitted rather than zero."""
        with pytest.raises(ValidationError):
            CouplingGraph(qubit_count=3, couplings={(1, 2): 0.0})

    def test_rejects_out_of_range(self):
        """Test that couplings stay inside the register."""
        with pytest.raises(ValidationError):
            CouplingGraph(qubit_count=2, couplings={(1, 3): 1.0})

    def test_digest(self):
        """Test that digests follow content."""
        a = CouplingGraph(qubit_count=2, couplings={(1, 2): 1.0})
        b = CouplingGraph(qubit_count=2, couplings={(1, 2): 1.0})
        c = CouplingGraph(qubit_count=2, couplings={(1, 2): 1.5})

        assert a.digest() == b.digest()
        assert a.digest() != c.digest()
        assert len(a.digest()) == 16


class TestLatticeSpec:
    """Tests for LatticeSpec schema."""

    def test_counts(self):
        """Test side length and site count."""
        spec = LatticeSpec(dimension=3, extent=2)

        assert spec.side == 5
        assert spec.site_count == 125

    def test_dimension_range(self):
        """Test that only 1-3 dimensions exist."""
        with pytest.raises(ValidationError):
            LatticeSpec(dimension=4, extent=1)


class TestMinPathSummary:
    """Tests for MinPathSummary schema."""

    def test_unreachable(self):
        """Test the unreachable form."""
        summary = MinPathSummary(source=1, target=3)

        assert not summary.reachable
        assert summary.weight_sum.is_zero
        assert summary.leading_order is None

    def test_self_pair_consistency(self):
        """Test that L = 0 exactly for the self pair."""
        with pytest.raises(ValidationError):
            MinPathSummary(source=1, target=2, hop_count=0, weight_sum=LogValue.one(), path_count=1)

    def test_reachable_needs_weight(self):
        """Test that reachable pairs carry a positive weight."""
        with pytest.raises(ValidationError):
            MinPathSummary(source=1, target=2, hop_count=1, path_count=1)


class TestCorrelationSeries:
    """Tests for CorrelationSeries schema."""

    def test_create_series(self):
        """Test a valid series and its log10 view."""
        series = CorrelationSeries(engine=Engine.EXACT, source=1, target=2, times=[0.0, 0.1], values=[0.0, 1e-3])

        assert series.log10() == [-math.inf, pytest.approx(-3.0)]

    def test_times_increase(self):
        """Test that times must increase strictly."""
        with pytest.raises(ValidationError):
            CorrelationSeries(engine=Engine.EXACT, source=1, target=2, times=[0.1, 0.1], values=[0.0, 0.0])

    def test_values_nonnegative(self):
        """Test that norms cannot be negative."""
        with pytest.raises(ValidationError):
            CorrelationSeries(engine=Engine.SERIES, source=1, target=2, times=[0.1], values=[-1.0])

    def test_lengths_match(self):
        """Test that values follow the grid."""
        with pytest.raises(ValidationError):
            CorrelationSeries(engine=Engine.EXACT, source=1, target=1, times=[0.1, 0.2], values=[0.0])


class TestLeadingTerm:
    """Tests for LeadingTerm schema."""

    def test_rational_coefficient(self):
        """Test the exact rational part of 4 pi."""
        term = LeadingTerm(source=1, target=1, order=1, g_norm_squared=Fraction(16), support=["X"])

        assert term.rational == 4
        assert term.hop_count == 0
        assert term.log10_coefficient == pytest.approx(math.log10(4.0 * math.pi))

    def test_irrational_coefficient(self):
        """Test that non-square coefficients have no rational form."""
        term = LeadingTerm(source=1, target=3, order=5, g_norm_squared=Fraction(512))

        assert term.rational is None
        assert term.rational_squared == Fraction(512, 14400)

    def test_even_order_rejected(self):
        """Test that leading orders are odd."""
        with pytest.raises(ValidationError):
            LeadingTerm(source=1, target=2, order=2, g_norm_squared=Fraction(1))


class TestAnalyticRecords:
    """Tests for snapshot and velocity records."""

    def test_snapshot_clip(self):
        """Test that snapshots hold only values at or below the clip."""
        FrontSnapshot(t_over_tau=1.0, delta_over_gamma=1.0, clip_log10=-2.0,
                      sites=[SiteValue(coordinates=(5,), log10_value=-2.0)])
        with pytest.raises(ValidationError):
            FrontSnapshot(t_over_tau=1.0, delta_over_gamma=1.0, clip_log10=-2.0,
                          sites=[SiteValue(coordinates=(1,), log10_value=-1.0)])

    def test_profile_angles(self):
        """Test that cubic profiles need polar angles and planar ones refuse them."""
        with pytest.raises(ValidationError):
            VelocityProfile(dimension=3, delta_over_gamma=1.0, axis_velocity=6.0,
                            points=[VelocityPoint(theta=0.1, velocity=5.0)])
        with pytest.raises(ValidationError):
            VelocityProfile(dimension=2, delta_over_gamma=1.0, axis_velocity=6.0,
                            points=[VelocityPoint(theta=0.1, phi=1.0, velocity=5.0)])


class TestRunConfig:
    """Tests for GraphSource, RunConfig and ResultTable."""

    def test_graph_source(self):
        """Test graph source parsing and rendering."""
        source = GraphSource.from_text("lattice3d:4")

        assert source.dimension == 3
        assert str(source) == "lattice3d:4"
        with pytest.raises(NetworkParseError):
            GraphSource.from_text("chain:many")

    def test_default_engine(self):
        """Test the per-command engine default."""
        chain = GraphSource.from_text("chain:3")

        assert RunConfig(command=Command.CORRELATE, graph=chain).resolved_engine == Engine.EXACT
        assert RunConfig(command=Command.FRONT, graph=chain).resolved_engine == Engine.ANALYTIC
        assert RunConfig(command=Command.FRONT, graph=chain).use_log10()

    def test_time_grid(self):
        """Test linear, logarithmic and single-point grids."""
        chain = GraphSource.from_text("chain:3")

        assert RunConfig(command=Command.CORRELATE, graph=chain, tmin=0.0, tmax=1.0, tsteps=5).time_grid() == [
            0.0, 0.25, 0.5, 0.75, 1.0
        ]
        log_grid = RunConfig(command=Command.CORRELATE, graph=chain, tmin=0.01, tmax=1.0, tsteps=3, tlog=True).time_grid()
        assert log_grid == pytest.approx([0.01, 0.1, 1.0])
        assert RunConfig(command=Command.CORRELATE, graph=chain, tmin=2.0, tsteps=1).time_grid() == [2.0]

    def test_bad_time_grids(self):
        """Test that unusable grids are refused."""
        chain = GraphSource.from_text("chain:3")

        with pytest.raises(TimeGridError):
            RunConfig(command=Command.CORRELATE, graph=chain, tmin=0.0, tmax=1.0, tlog=True).time_grid()
        with pytest.raises(TimeGridError):
            RunConfig(command=Command.CORRELATE, graph=chain, tmin=-1.0, tmax=1.0).time_grid()

    def test_result_table_rectangular(self):
        """Test that ragged tables are refused."""
        with pytest.raises(ValidationError):
            ResultTable(columns=["a", "b"], rows=[[1.0]])

    def test_result_table_convention(self):
        """Test that every table carries the time convention."""
        table = ResultTable(columns=["t_over_tau"], rows=[[0.5]])

        assert "time_convention" in table.meta
        assert table.column("t_over_tau") == [0.5]
