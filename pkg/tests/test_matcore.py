import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import kron_loops, partial_trace_loops, partial_transpose_loops
from tsallis_cond.errors import DimensionMismatch, NotHermitian, NotSquare
from tsallis_cond.matcore import hermitian_eigen, kron, partial_trace, partial_transpose

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
SINGLET = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def random_hermitian(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return g + g.conj().T


def random_rho(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    m = g @ g.conj().T
    return m / np.trace(m).real


class TestHermitianEigen:
    def test_identity(self):
        w, _ = hermitian_eigen(np.eye(2))
        np.testing.assert_allclose(w, [1, 1], atol=1e-15)

    def test_diagonal(self):
        w, v = hermitian_eigen(np.diag([3.0, -1.0]))
        np.testing.assert_allclose(w, [3, -1], atol=1e-15)
        np.testing.assert_allclose(np.abs(v), np.eye(2), atol=1e-15)

    def test_pauli_x(self):
        w, v = hermitian_eigen(PAULI_X)
        np.testing.assert_allclose(w, [1, -1], atol=1e-14)
        np.testing.assert_allclose(PAULI_X @ v, v * w, atol=1e-14)

    def test_complex_pivot(self):
        # Pauli-Y has purely imaginary off-diagonals
        y = np.array([[0, -1j], [1j, 0]])
        w, v = hermitian_eigen(y)
        np.testing.assert_allclose(w, [1, -1], atol=1e-14)
        np.testing.assert_allclose(y @ v, v * w, atol=1e-14)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 9, 16])
    def test_invariants_against_lapack(self, rng, n):
        for _ in range(10):
            h = random_hermitian(rng, n)
            w, u = hermitian_eigen(h)
            assert np.all(np.diff(w) <= 0)
            np.testing.assert_allclose(u.conj().T @ u, np.eye(n), atol=1e-10, rtol=0)
            np.testing.assert_allclose(u @ np.diag(w) @ u.conj().T, h, atol=1e-10, rtol=0)
            np.testing.assert_allclose(w, np.linalg.eigvalsh(h)[::-1], atol=1e-10, rtol=0)

    def test_trace_and_determinant(self, rng):
        for n in (2, 3, 4):
            for _ in range(20):
                h = random_hermitian(rng, n)
                w = hermitian_eigen(h).eigenvalues
                assert abs(w.sum() - np.trace(h).real) <= 1e-10
                assert abs(np.prod(w) - np.linalg.det(h).real) <= 1e-8 * max(1.0, abs(np.prod(w)))

    def test_degenerate_spectrum(self):
        w, u = hermitian_eigen(np.eye(4) / 4)
        np.testing.assert_allclose(w, [0.25] * 4, atol=1e-16)
        np.testing.assert_allclose(u, np.eye(4), atol=0)

    def test_rejects_non_square(self):
        with pytest.raises(NotSquare):
            hermitian_eigen(np.zeros((2, 3)))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eigen(np.array([[1.0, 1e-9], [0.0, 1.0]]))

    def test_accepts_asymmetry_within_tolerance(self):
        w = hermitian_eigen(np.array([[1.0, 1e-11], [0.0, 1.0]])).eigenvalues
        np.testing.assert_allclose(w, [1, 1], atol=1e-10)


class TestKron:
    def test_identity(self):
        np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_projectors(self):
        np.testing.assert_array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))

    def test_block_structure(self):
        d = np.diag([2.0, 3.0])
        z = np.zeros((2, 2))
        expected = np.block([[z, d], [d, z]])
        np.testing.assert_array_equal(kron(PAULI_X, d), expected)

    def test_matches_loops(self, rng):
        a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        b = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
        np.testing.assert_allclose(kron(a, b), kron_loops(a, b), atol=1e-15)

    def test_trace_multiplies(self, rng):
        a, b = random_rho(rng, 3), random_rho(rng, 2)
        assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) <= 1e-12


class TestPartialTrace:
    def test_product_factorizes(self, rng):
        a, b = random_rho(rng, 2), random_rho(rng, 3)
        np.testing.assert_allclose(partial_trace(kron(a, b), (2, 3), "A"), a, atol=1e-15)
        np.testing.assert_allclose(partial_trace(kron(a, b), (2, 3), "B"), b, atol=1e-15)

    def test_singlet_marginals(self):
        rho = np.outer(SINGLET, SINGLET.conj())
        np.testing.assert_allclose(partial_trace(rho, (2, 2), "A"), np.eye(2) / 2, atol=1e-12)
        np.testing.assert_allclose(partial_trace(rho, (2, 2), "B"), np.eye(2) / 2, atol=1e-12)

    def test_maximally_mixed(self):
        np.testing.assert_allclose(partial_trace(np.eye(4) / 4, (2, 2), "B"), np.eye(2) / 2)

    @pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 2), (3, 3)])
    def test_matches_loops(self, rng, dims):
        m = random_rho(rng, dims[0] * dims[1])
        for keep in "AB":
            out = partial_trace(m, dims, keep)
            np.testing.assert_allclose(out, partial_trace_loops(m, *dims, keep), atol=1e-15)
            assert abs(np.trace(out) - 1) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            partial_trace(np.eye(4), (2, 3), "A")


class TestPartialTranspose:
    def test_product(self, rng):
        a, b = random_rho(rng, 2), random_rho(rng, 2)
        np.testing.assert_allclose(partial_transpose(kron(a, b), (2, 2), "B"), kron(a, b.T), atol=1e-15)

    def test_singlet_min_eigenvalue(self):
        rho = np.outer(SINGLET, SINGLET.conj())
        w = hermitian_eigen(partial_transpose(rho, (2, 2), "B")).eigenvalues
        # spectrum of the partially transposed Werner state at x = 1: (1+x)/4 x3, (1-3x)/4
        np.testing.assert_allclose(w, [0.5, 0.5, 0.5, -0.5], atol=1e-14)

    @pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 2)])
    @pytest.mark.parametrize("on", ["A", "B"])
    def test_matches_loops_and_involutive(self, rng, dims, on):
        m = random_rho(rng, dims[0] * dims[1])
        pt = partial_transpose(m, dims, on)
        np.testing.assert_array_equal(pt, partial_transpose_loops(m, *dims, on))
        np.testing.assert_array_equal(partial_transpose(pt, dims, on), m)
        assert abs(np.trace(pt) - np.trace(m)) <= 1e-15
        np.testing.assert_allclose(pt, pt.conj().T, atol=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            partial_transpose(np.eye(6), (2, 2), "B")


@settings(max_examples=50, deadline=None)
@given(
    st.integers(min_value=1, max_value=5),
    st.lists(st.floats(-10, 10), min_size=50, max_size=50),
)
def test_eigen_reconstruction_property(n, vals):
    re = np.array(vals[: n * n]).reshape(n, n)
    im = np.array(vals[25: 25 + n * n]).reshape(n, n)
    h = re + re.T + 1j * (im - im.T)
    w, u = hermitian_eigen(h)
    scale = max(1.0, np.abs(h).max())
    np.testing.assert_allclose(u @ np.diag(w) @ u.conj().T, h, atol=1e-10 * scale, rtol=0)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(n), atol=1e-10, rtol=0)
