"""Tests for graph builders, network files and minimum-path analysis."""

import math
from pathlib import Path

import numpy as np
import pytest

from src.errors import (
    CapExceededError,
    DuplicateEdgeError,
    NetworkParseError,
    SelfLoopError,
    SiteIndexError,
    SymmetryError,
)
from src.network import (
    build_chain,
    build_lattice,
    enumerate_min_paths,
    group_degenerate_targets,
    hamiltonian,
    load_network,
    min_path_summaries,
    min_path_summary,
    path_weight,
    to_network_json,
    to_network_text,
)
from src.operators import PauliString
from src.schemas.graph import CouplingGraph, LatticeSpec
from src.utils.logspace import LogValue

NETWORK9 = Path(__file__).resolve().parent.parent / "networks" / "network9.txt"

SQUARE = CouplingGraph(
    qubit_count=4,
    couplings={(1, 2): 2.0, (2, 3): 0.5, (1, 4): 1.0, (3, 4): 1.0},
)


def random_connected_graph(rng, max_qubits=10):
    """Random spanning tree plus extra edges, couplings in [-2, 2] without zero."""
    n = int(rng.integers(2, max_qubits + 1))

    def draw():
        while True:
            value = float(rng.uniform(-2.0, 2.0))
            if abs(value) > 1e-3:
                return value

    couplings = {}
    for q in range(2, n + 1):
        parent = int(rng.integers(1, q))
        couplings[(parent, q)] = draw()
    for _ in range(int(rng.integers(0, n + 1))):
        a, b = sorted(int(v) for v in rng.choice(np.arange(1, n + 1), size=2, replace=False))
        couplings.setdefault((a, b), draw())
    return CouplingGraph(qubit_count=n, couplings=couplings)


class TestBuilders:
    """Tests for chain and lattice builders."""

    def test_chain(self):
        """Test chain size and uniform couplings."""
        graph = build_chain(9, 1.5)

        assert graph.qubit_count == 9
        assert graph.edge_count == 8
        assert set(graph.couplings.values()) == {1.5}
        assert graph.coupling(3, 2) == 1.5

    def test_single_qubit_chain(self):
        """Test that a one-qubit chain has no edges."""
        assert build_chain(1, 1.0).edge_count == 0

    def test_lattice_counts(self):
        """Test site and edge counts of small lattices."""
        graph2, index2 = build_lattice(LatticeSpec(dimension=2, extent=1))
        graph3, _ = build_lattice(LatticeSpec(dimension=3, extent=1))

        assert (graph2.qubit_count, graph2.edge_count) == (9, 12)
        assert (graph3.qubit_count, graph3.edge_count) == (27, 54)
        assert index2[(0, 0)] == 5

    def test_one_dimensional_lattice_is_a_chain(self):
        """Test that a 1D lattice matches a chain of 2N+1 qubits."""
        graph, index = build_lattice(LatticeSpec(dimension=1, extent=4, delta_over_gamma=2.0))

        assert graph == build_chain(9, 2.0)
        assert index[(0,)] == 5

    def test_lattice_cap(self):
        """Test that oversized lattices are refused."""
        with pytest.raises(CapExceededError):
            build_lattice(LatticeSpec(dimension=3, extent=5), site_cap=1000)

    def test_hamiltonian_terms(self):
        """Test field and coupling coefficients of H/gamma."""
        h = hamiltonian(build_chain(2, 3.0))

        assert len(h) == 3
        assert h.coefficient(PauliString.from_label("XI")) == -1
        assert h.coefficient(PauliString.from_label("IX")) == -1
        assert h.coefficient(PauliString.from_label("ZZ")) == -1.5

    def test_isolated_qubits(self):
        """Test that a graph without edges has only field terms."""
        h = hamiltonian(CouplingGraph(qubit_count=3))

        assert len(h) == 3


class TestLoader:
    """Tests for network file parsing."""

    def test_load_bundled_network(self):
        """Test the bundled nine-qubit network."""
        graph = load_network(NETWORK9.read_text())

        assert graph.qubit_count == 9
        assert graph.edge_count == 10
        assert graph.coupling(2, 3) == 1.2

    def test_text_and_json_agree(self):
        """Test that both encodings describe the same graph."""
        graph = load_network(NETWORK9.read_text())

        assert load_network(to_network_text(graph)) == graph
        assert load_network(to_network_json(graph)) == graph

    def test_comments_and_gamma_default(self):
        """Test comments, blank lines and the default gamma."""
        graph = load_network("# header\nqubits 3\n\nedge 1 2 0.5  # first\nedge 3 2 -1\n")

        assert graph.gamma == 1.0
        assert graph.couplings == {(1, 2): 0.5, (2, 3): -1.0}

    def test_self_loop(self):
        """Test that self-loops are rejected."""
        with pytest.raises(SelfLoopError):
            load_network("qubits 2\nedge 1 1 0.5\n")

    def test_mirrored_mismatch(self):
        """Test that a mirrored edge with another coupling is an asymmetry."""
        with pytest.raises(SymmetryError):
            load_network("qubits 2\nedge 1 2 0.5\nedge 2 1 0.7\n")

    def test_mirrored_duplicate(self):
        """Test that a consistent mirrored edge is still a duplicate."""
        with pytest.raises(DuplicateEdgeError):
            load_network("qubits 2\nedge 1 2 0.5\nedge 2 1 0.5\n")

    def test_repeated_edge(self):
        """Test that repeated edges are rejected."""
        with pytest.raises(DuplicateEdgeError):
            load_network("qubits 3\nedge 1 2 0.5\nedge 1 2 0.5\n")

    def test_parse_error_names_line(self):
        """Test that malformed lines report their line number and field."""
        with pytest.raises(NetworkParseError) as info:
            load_network("qubits 3\nedge 1 two 0.5\n")

        assert info.value.line == 2
        assert info.value.field == "k"

    def test_out_of_range_qubit(self):
        """Test that qubit indices beyond the header are rejected."""
        with pytest.raises(NetworkParseError):
            load_network("qubits 2\nedge 1 3 0.5\n")

    def test_zero_coupling(self):
        """Test that explicit zero couplings are rejected."""
        with pytest.raises(NetworkParseError):
            load_network("qubits 2\nedge 1 2 0\n")

    def test_missing_header(self):
        """Test that the qubit count is required."""
        with pytest.raises(NetworkParseError):
            load_network("edge 1 2 0.5\n")


class TestMinPaths:
    """Tests for minimum-path summaries and enumeration."""

    def test_chain_summary(self):
        """Test hop count, count and weight along a chain."""
        summary = min_path_summary(build_chain(9, 2.0), 1, 4)

        assert summary.hop_count == 3
        assert summary.path_count == 1
        assert summary.weight_sum.log_magnitude == pytest.approx(6 * math.log(2.0), rel=1e-14)
        assert summary.leading_order == 7

    def test_self_pair(self):
        """Test that j == k has L = 0 and unit weight."""
        summary = min_path_summary(build_chain(3, 1.0), 2, 2)

        assert summary.hop_count == 0
        assert summary.weight_sum.to_float() == 1.0

    def test_square_two_paths(self):
        """Test the two-path square: weights 1 and 1 sum to 2."""
        summary = min_path_summary(SQUARE, 1, 3)

        assert summary.hop_count == 2
        assert summary.path_count == 2
        assert summary.weight_sum.to_float() == pytest.approx(2.0, rel=1e-14)

    def test_symmetric(self):
        """Test that summaries do not depend on direction."""
        graph = load_network(NETWORK9.read_text())
        forward = min_path_summary(graph, 1, 9)
        backward = min_path_summary(graph, 9, 1)

        assert forward.hop_count == backward.hop_count
        assert forward.path_count == backward.path_count
        assert forward.weight_sum.log_magnitude == pytest.approx(backward.weight_sum.log_magnitude, abs=1e-12)

    def test_sign_of_coupling_ignored(self):
        """Test that weights use squared couplings."""
        negative = CouplingGraph(qubit_count=3, couplings={(1, 2): -1.5, (2, 3): 1.5})

        assert min_path_summary(negative, 1, 3).weight_sum.to_float() == pytest.approx(1.5 ** 4)

    def test_unreachable(self):
        """Test that disconnected pairs have no hop count."""
        graph = CouplingGraph(qubit_count=3, couplings={(1, 2): 1.0})
        summary = min_path_summary(graph, 1, 3)

        assert not summary.reachable
        assert summary.leading_order is None
        assert enumerate_min_paths(graph, 1, 3) == []

    def test_bad_index(self):
        """Test that out-of-range qubits are rejected."""
        with pytest.raises(SiteIndexError):
            min_path_summary(build_chain(3, 1.0), 1, 4)

    def test_lattice_path_counts_2d(self):
        """Test binomial path counts on the square lattice."""
        graph, index = build_lattice(LatticeSpec(dimension=2, extent=10))
        summaries = min_path_summaries(graph, index[(0, 0)])

        for n in range(11):
            for m in range(11 - n):
                summary = summaries[index[(n, -m)]]
                assert summary.hop_count == n + m
                assert summary.path_count == math.comb(n + m, n)

    def test_lattice_path_counts_3d(self):
        """Test multinomial path counts on the cubic lattice."""
        graph, index = build_lattice(LatticeSpec(dimension=3, extent=9))
        summaries = min_path_summaries(graph, index[(0, 0, 0)])

        for n in range(10):
            for m in range(10 - n):
                for p in range(10 - n - m):
                    expected = math.factorial(n + m + p) // (
                        math.factorial(n) * math.factorial(m) * math.factorial(p)
                    )
                    assert summaries[index[(n, m, p)]].path_count == expected

    def test_enumerate_lattice_paths(self):
        """Test explicit enumeration of 3 and 20 minimum paths."""
        graph, index = build_lattice(LatticeSpec(dimension=2, extent=3))
        origin = index[(0, 0)]

        assert len(enumerate_min_paths(graph, origin, index[(2, 1)])) == 3
        paths = enumerate_min_paths(graph, origin, index[(3, 3)])
        assert len(paths) == 20
        assert len({tuple(p) for p in paths}) == 20

    def test_enumerate_chain(self):
        """Test the single chain path."""
        assert enumerate_min_paths(build_chain(5, 1.0), 1, 5) == [[1, 2, 3, 4, 5]]

    def test_enumeration_cap(self):
        """Test that enumeration refuses beyond its cap."""
        graph, index = build_lattice(LatticeSpec(dimension=2, extent=3))

        with pytest.raises(CapExceededError):
            enumerate_min_paths(graph, index[(0, 0)], index[(3, 3)], cap=10)

    def test_dynamic_programming_matches_enumeration(self):
        """Test weight sums against brute-force enumeration on random graphs."""
        rng = np.random.default_rng(2024)
        for _ in range(100):
            graph = random_connected_graph(rng)
            summaries = min_path_summaries(graph, 1)

            for k, summary in summaries.items():
                paths = enumerate_min_paths(graph, 1, k)
                brute = LogValue.sum(path_weight(graph, p) for p in paths)
                assert summary.path_count == len(paths)
                assert summary.weight_sum.log_magnitude == pytest.approx(brute.log_magnitude, abs=1e-12)

    def test_degenerate_groups(self):
        """Test that mirror-image branches share a group."""
        graph = load_network(NETWORK9.read_text())
        groups = group_degenerate_targets(graph, 1)

        assert [3, 4] in groups
        assert [7, 8] in groups
        assert groups[0] == [1]

    def test_chain_groups_from_center(self):
        """Test grouping of symmetric chain sites."""
        assert group_degenerate_targets(build_chain(5, 1.0), 3) == [[3], [2, 4], [1, 5]]

    def test_group_tolerance_on_log_weight(self):
        """Test that the tolerance applies to ln W, not to W."""
        graph = CouplingGraph(qubit_count=3, couplings={(1, 2): 1.0, (1, 3): 1.000001})

        assert group_degenerate_targets(graph, 1) == [[1], [2], [3]]
        assert group_degenerate_targets(graph, 1, log_tol=1e-5) == [[1], [2, 3]]
