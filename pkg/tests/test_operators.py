"""Tests for Pauli-string algebra, operator sums and dense rendering."""

import math

import numpy as np
import pytest

from src.errors import DenseLimitError, DimensionError
from src.network.builders import build_chain, hamiltonian, sigma_z
from src.operators import (
    GaussianRational,
    OperatorSum,
    PauliString,
    commutator,
    commutator_sum,
    frobenius_norm,
    multiply,
    pauli_to_dense,
    to_dense,
    z_diagonal,
)


def random_sum(rng, qubit_count, terms=5, exact=False):
    """Sum of random strings with small integer (Gaussian) coefficients."""
    limit = 1 << qubit_count
    coeffs = {}
    for _ in range(terms):
        key = (int(rng.integers(limit)), int(rng.integers(limit)))
        coeffs[key] = complex(int(rng.integers(-3, 4)), int(rng.integers(-3, 4)))
    return OperatorSum(qubit_count, coeffs, exact=exact)


class TestPauliString:
    """Tests for PauliString."""

    def test_label_round_trip(self):
        """Test that labels survive parsing with qubit 1 first."""
        pauli = PauliString.from_label("XIZY")

        assert pauli.label == "XIZY"
        assert pauli.support == (1, 3, 4)
        assert pauli.x_mask == 0b1001
        assert pauli.z_mask == 0b1100

    def test_bad_letter(self):
        """Test that unknown letters are rejected."""
        with pytest.raises(ValueError):
            PauliString.from_label("XQ")

    def test_masks_must_fit(self):
        """Test that masks wider than the qubit count are rejected."""
        with pytest.raises(DimensionError):
            PauliString(0b100, 0, 2)

    def test_x_times_z(self):
        """Test X Z = -i Y on one qubit."""
        phase, product = multiply(PauliString.from_label("X"), PauliString.from_label("Z"))

        assert phase == -1j
        assert product.label == "Y"

    def test_multiply_matches_dense(self):
        """Test the phase rule against dense matrix products."""
        rng = np.random.default_rng(7)
        for _ in range(50):
            a = PauliString(int(rng.integers(8)), int(rng.integers(8)), 3)
            b = PauliString(int(rng.integers(8)), int(rng.integers(8)), 3)
            phase, product = multiply(a, b)

            expected = pauli_to_dense(a) @ pauli_to_dense(b)
            assert np.allclose(expected, phase * pauli_to_dense(product))

    def test_single_qubit_commutator(self):
        """Test [X, Z] = -2i Y."""
        result = commutator(PauliString.from_label("X"), PauliString.from_label("Z"))

        assert result.coefficient(PauliString.from_label("Y")) == -2j
        assert len(result) == 1

    def test_two_qubit_commutator(self):
        """Test [Z1 Z2, X2] = 2i Z1 Y2."""
        result = commutator(PauliString.from_label("ZZ"), PauliString.from_label("IX"))

        assert result.coefficient(PauliString.from_label("ZY")) == 2j

    def test_commuting_strings_give_zero(self):
        """Test that commuting strings have an empty commutator."""
        result = commutator(PauliString.from_label("XX"), PauliString.from_label("ZZ"))

        assert result.is_zero

    def test_commutes_with(self):
        """Test the overlap-parity rule on strings."""
        zz = PauliString.from_label("ZZI")

        assert zz.commutes_with(PauliString.from_label("XXI"))
        assert not zz.commutes_with(PauliString.from_label("XII"))
        assert zz.commutes_with(PauliString.from_label("IIX"))

    def test_y_matrix(self):
        """Test the dense form of Y."""
        assert np.allclose(pauli_to_dense(PauliString.from_label("Y")), [[0, -1j], [1j, 0]])


class TestOperatorSum:
    """Tests for OperatorSum."""

    def test_frobenius_norm(self):
        """Test ||3 X1 + 4i Z2|| = 5."""
        op = OperatorSum(2, {PauliString.from_label("XI"): 3, PauliString.from_label("IZ"): 4j})

        assert frobenius_norm(op) == pytest.approx(5.0, rel=1e-15)

    def test_norm_matches_dense(self):
        """Test the coefficient norm against the dense normalized Frobenius norm."""
        rng = np.random.default_rng(11)
        for _ in range(10):
            op = random_sum(rng, 4, terms=8)

            dense = to_dense(op)
            assert frobenius_norm(op) == pytest.approx(dense.normalized_frobenius_norm(), rel=1e-12)

    def test_commutator_matches_dense(self):
        """Test commutator_sum against AB - BA on dense matrices."""
        rng = np.random.default_rng(3)
        for _ in range(10):
            a = random_sum(rng, 3)
            b = random_sum(rng, 3)

            expected = to_dense(a).matrix @ to_dense(b).matrix - to_dense(b).matrix @ to_dense(a).matrix
            assert np.allclose(to_dense(commutator_sum(a, b)).matrix, expected)

    def test_antisymmetry(self):
        """Test [A, B] = -[B, A] exactly."""
        rng = np.random.default_rng(5)
        a = random_sum(rng, 4, exact=True)
        b = random_sum(rng, 4, exact=True)

        assert commutator_sum(a, b) == -commutator_sum(b, a)

    def test_jacobi_identity(self):
        """Test [A,[B,C]] + [B,[C,A]] + [C,[A,B]] = 0 in exact arithmetic."""
        rng = np.random.default_rng(13)
        for _ in range(5):
            a, b, c = (random_sum(rng, 4, exact=True) for _ in range(3))

            total = (
                commutator_sum(a, commutator_sum(b, c))
                + commutator_sum(b, commutator_sum(c, a))
                + commutator_sum(c, commutator_sum(a, b))
            )
            assert total.is_zero

    def test_chain_hamiltonian_commutator(self):
        """Test that [H, Z1] on a three-qubit chain is 2i Y1."""
        h = hamiltonian(build_chain(3, 1.0))
        result = commutator_sum(h, sigma_z(1, 3))

        assert len(result) == 1
        assert result.coefficient(PauliString.from_label("YII")) == pytest.approx(2j)

    def test_exact_cancellation_removed(self):
        """Test that terms cancelling exactly leave no entry behind."""
        x = OperatorSum.from_pauli(PauliString.from_label("XI"), 1, exact=True)

        assert (x - x).is_zero

    def test_exact_coefficients(self):
        """Test that exact sums keep rational coefficients."""
        op = OperatorSum.from_pauli(PauliString.from_label("Z"), 0.5, exact=True)

        assert op.coefficient(PauliString.from_label("Z")) == GaussianRational.of(0.5)
        assert op.norm_squared() == pytest.approx(0.25)

    def test_mismatched_qubit_counts(self):
        """Test that sums over different qubit counts do not combine."""
        with pytest.raises(DimensionError):
            commutator_sum(sigma_z(1, 2), sigma_z(1, 3))


class TestDense:
    """Tests for the dense bridge."""

    def test_z_on_first_qubit(self):
        """Test that qubit 1 is the most significant basis bit."""
        assert np.allclose(z_diagonal(1, 2), [1, 1, -1, -1])
        assert np.allclose(to_dense(sigma_z(1, 2)).matrix, np.diag([1, 1, -1, -1]))

    def test_limit(self):
        """Test that dense rendering refuses registers above the limit."""
        with pytest.raises(DenseLimitError):
            to_dense(sigma_z(1, 5), limit=4)

    def test_hermitian_hamiltonian(self):
        """Test that the chain Hamiltonian is real symmetric."""
        matrix = to_dense(hamiltonian(build_chain(4, 2.0))).matrix

        assert np.allclose(matrix, matrix.conj().T)
        assert np.allclose(matrix.imag, 0.0)
        assert math.isclose(np.trace(matrix).real, 0.0, abs_tol=1e-12)
