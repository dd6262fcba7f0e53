"""Matrix-level contracts: hermitization, eigensolver, Cholesky, pencil.

Derived expectations come from independent oracles implemented here:
characteristic-polynomial roots for small eigenproblems, cofactor expansion
for determinants, and a direct generalized-eigenvalue computation for the
pencil.
"""

import numpy as np
import pytest

from conftest import random_hermitian
from pickjet.errors import (
    ConvergenceError,
    NotHermitianError,
    NotPositiveDefiniteError,
    NotSquareError,
)
from pickjet.linalg import (
    cholesky,
    eig_hermitian,
    hermitian_defect,
    make_hermitian,
    max_abs,
    min_eigenvalue,
    pencil_max_eig,
    solve_lower_triangular,
)


def charpoly_eigs(h):
    """Eigenvalues as roots of det(xI - H), via Faddeev-LeVerrier traces."""
    n = h.shape[0]
    coeffs = [1.0 + 0j]
    m = np.zeros_like(h)
    for k in range(1, n + 1):
        m = h @ m + coeffs[-1] * np.eye(n)
        coeffs.append(-np.trace(h @ m) / k)
    roots = np.roots(np.array(coeffs))
    return np.sort(roots.real)


def cofactor_det(h):
    n = h.shape[0]
    if n == 1:
        return h[0, 0]
    total = 0j
    for j in range(n):
        minor = np.delete(np.delete(h, 0, axis=0), j, axis=1)
        total += (-1) ** j * h[0, j] * cofactor_det(minor)
    return total


def jacobi_rotation(n, p, q, angle, phase):
    r = np.eye(n, dtype=np.complex128)
    c, s = np.cos(angle), np.sin(angle)
    r[p, p] = c
    r[q, q] = c
    r[p, q] = s * np.exp(1j * phase)
    r[q, p] = -s * np.exp(-1j * phase)
    return r


class TestMakeHermitian:
    def test_already_hermitian_singleton(self):
        assert np.array_equal(make_hermitian([[1.0]], 1e-9), [[1.0]])

    def test_hermitian_input_unchanged(self):
        h = np.array([[2.0, 1j], [-1j, 2.0]])
        assert np.array_equal(make_hermitian(h), h)

    def test_defect_above_tolerance_rejected(self):
        with pytest.raises(NotHermitianError) as info:
            make_hermitian([[0.0, 1.0], [0.0, 0.0]], 1e-9)
        assert info.value.defect == pytest.approx(1.0)

    def test_small_defect_averaged_away(self):
        h = make_hermitian([[1.0, 1e-12 + 1j * 1e-12], [0.0, 2.0]], 1e-9)
        assert hermitian_defect(h) == 0.0
        assert h.diagonal().imag.max() == 0.0

    def test_non_square_rejected(self):
        with pytest.raises(NotSquareError):
            make_hermitian(np.zeros((2, 3)))


class TestEigHermitian:
    def test_two_by_two_known_spectrum(self):
        d = eig_hermitian(np.array([[2.0, 1j], [-1j, 2.0]]))
        assert np.allclose(d.eigenvalues, [1.0, 3.0], atol=1e-12, rtol=0)

    def test_identity_spectrum(self):
        d = eig_hermitian(np.eye(3))
        assert np.array_equal(d.eigenvalues, [1.0, 1.0, 1.0])

    def test_random_4x4_against_charpoly_roots(self):
        rng = np.random.default_rng(42)
        h = random_hermitian(rng, 4)
        expected = charpoly_eigs(h)
        got = eig_hermitian(h).eigenvalues
        assert np.allclose(got, expected, rtol=1e-9, atol=1e-9)

    @pytest.mark.parametrize("dim", [1, 2, 3, 6, 12, 30])
    def test_residual_and_unitarity(self, dim):
        rng = np.random.default_rng(dim)
        h = random_hermitian(rng, dim)
        d = eig_hermitian(h)
        bound = 1e-10 * max(1.0, float(np.linalg.norm(h)))
        for k in range(dim):
            residual = h @ d.eigenvectors[:, k] - d.eigenvalues[k] * d.eigenvectors[:, k]
            assert np.linalg.norm(residual) <= bound
        gram = d.eigenvectors.conj().T @ d.eigenvectors
        assert max_abs(gram - np.eye(dim)) <= 1e-10

    def test_eigenvalues_ascending(self):
        rng = np.random.default_rng(5)
        values = eig_hermitian(random_hermitian(rng, 8)).eigenvalues
        assert np.all(np.diff(values) >= 0)

    def test_trace_and_determinant(self):
        rng = np.random.default_rng(9)
        h = random_hermitian(rng, 4)
        d = eig_hermitian(h)
        trace = float(np.trace(h).real)
        assert d.eigenvalues.sum() == pytest.approx(trace, abs=1e-9 * max(1.0, abs(trace)))
        det = cofactor_det(h)
        assert np.prod(d.eigenvalues) == pytest.approx(det.real, abs=1e-9)
        assert det.imag == pytest.approx(0.0, abs=1e-9)

    def test_unitary_conjugation_invariance(self):
        rng = np.random.default_rng(13)
        h = random_hermitian(rng, 6)
        u = np.eye(6, dtype=np.complex128)
        for _ in range(8):
            p, q = sorted(rng.choice(6, size=2, replace=False))
            u = u @ jacobi_rotation(6, p, q, rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        assert max_abs(u @ u.conj().T - np.eye(6)) < 1e-13
        base = eig_hermitian(h).eigenvalues
        conj = eig_hermitian(u @ h @ u.conj().T).eigenvalues
        assert np.allclose(base, conj, rtol=0, atol=1e-9)

    def test_sweep_cap_raises(self):
        with pytest.raises(ConvergenceError):
            eig_hermitian(np.array([[2.0, 1j], [-1j, 2.0]]), max_sweeps=0)


class TestMinEigenvalue:
    def test_projection(self):
        assert min_eigenvalue(np.diag([1.0, 0.0])) == pytest.approx(0.0, abs=1e-15)

    def test_negative(self):
        assert min_eigenvalue(np.diag([1.0, -3.0])) == pytest.approx(-3.0, abs=1e-12)

    def test_conjugated_diagonal(self):
        u = jacobi_rotation(3, 0, 1, 0.7, 1.1) @ jacobi_rotation(3, 1, 2, 1.9, -0.4)
        h = u @ np.diag([5.0, 2.0, 7.0]).astype(np.complex128) @ u.conj().T
        assert min_eigenvalue(h) == pytest.approx(2.0, abs=1e-10)


class TestCholesky:
    def test_identity(self):
        assert np.array_equal(cholesky(np.eye(2)), np.eye(2))

    def test_diagonal(self):
        assert np.allclose(cholesky(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=0)

    def test_singular_rejected(self):
        with pytest.raises(NotPositiveDefiniteError) as info:
            cholesky(np.diag([1.0, 0.0]))
        assert info.value.index == 1

    def test_roundtrip_recovers_factor(self):
        rng = np.random.default_rng(17)
        l = np.tril(rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)), -1)
        l += np.diag(rng.uniform(0.5, 2.0, size=5))
        h = l @ l.conj().T
        got = cholesky(h)
        assert np.allclose(got, l, rtol=0, atol=1e-10 * np.linalg.norm(l))

    def test_factor_reproduces_input(self):
        rng = np.random.default_rng(19)
        h = random_hermitian(rng, 7)
        h = h @ h.conj().T + 7 * np.eye(7)
        l = cholesky(h)
        assert max_abs(l @ l.conj().T - h) <= 1e-10 * np.linalg.norm(h)


class TestSolveLowerTriangular:
    def test_matches_direct_inverse(self):
        rng = np.random.default_rng(29)
        l = np.tril(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        l += np.diag([2.0, 2.0, 2.0, 2.0])
        b = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
        x = solve_lower_triangular(l, b)
        assert np.allclose(l @ x, b, atol=1e-12)

    def test_vector_right_hand_side(self):
        l = np.array([[2.0, 0.0], [1.0, 3.0]], dtype=np.complex128)
        x = solve_lower_triangular(l, np.array([4.0, 7.0]))
        assert np.allclose(l @ x, [4.0, 7.0], atol=1e-14)


class TestPencilMaxEig:
    def test_identity_pair(self):
        assert pencil_max_eig(np.eye(2), np.eye(2)) == pytest.approx(1.0, abs=1e-14)

    def test_zero_numerator(self):
        g = np.diag([2.0, 5.0])
        assert pencil_max_eig(np.zeros((2, 2)), g) == pytest.approx(0.0, abs=1e-14)

    def test_diagonal_ratios(self):
        b = np.diag([2.0, 1.0])
        g = np.diag([1.0, 4.0])
        assert pencil_max_eig(b, g) == pytest.approx(2.0, abs=1e-12)

    def test_identity_denominator_reduces_to_max_eig(self):
        rng = np.random.default_rng(37)
        b = random_hermitian(rng, 5)
        expected = eig_hermitian(b).eigenvalues[-1]
        assert pencil_max_eig(b, np.eye(5)) == pytest.approx(expected, abs=1e-9)

    def test_against_direct_generalized_solve(self):
        rng = np.random.default_rng(41)
        b = random_hermitian(rng, 6)
        g = random_hermitian(rng, 6)
        g = g @ g.conj().T + 6 * np.eye(6)
        expected = float(np.max(np.linalg.eigvals(np.linalg.solve(g, b)).real))
        assert pencil_max_eig(b, g) == pytest.approx(expected, abs=1e-9)

    def test_indefinite_denominator_rejected(self):
        with pytest.raises(NotPositiveDefiniteError):
            pencil_max_eig(np.eye(2), np.diag([1.0, -1.0]))
