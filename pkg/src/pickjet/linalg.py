"""Dense complex Hermitian linear algebra.

Everything downstream reduces to three primitives on complex Hermitian
matrices: enforcing Hermitian symmetry, eigendecomposition by cyclic Jacobi
rotations, and Cholesky factorization (used to whiten a definite pencil).
Matrices are plain complex128 arrays; functions, not classes, carry the
invariants.
"""

import math
from typing import NamedTuple

import numpy as np

from . import _backend
from .errors import ConvergenceError, NotHermitianError, NotPositiveDefiniteError, NotSquareError

# Relative off-diagonal target for the Jacobi sweep, against the Frobenius
# norm of the input.
OFF_DIAGONAL_TOL = 1e-14
# Full-sweep cap before the eigensolver gives up.
MAX_SWEEPS = 50
# Rotations on entries below this modulus are skipped (denormal churn).
ROTATION_SKIP = 1e-30
# A Cholesky pivot at or below this fraction of the dominant diagonal entry
# means the matrix is not positive definite.
CHOLESKY_PIVOT_TOL = 1e-13
# Default relative bound on the asymmetry defect accepted by make_hermitian.
HERMITIZE_TOL = 1e-9


def as_complex_matrix(m):
    """Copy ``m`` into a square C-contiguous complex128 array."""
    a = np.array(m, dtype=np.complex128, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {a.shape}")
    return a


def max_abs(m):
    """Largest entry modulus, 0 for an empty matrix."""
    a = np.asarray(m)
    return float(np.abs(a).max()) if a.size else 0.0


def frobenius_norm(m):
    return float(np.linalg.norm(np.asarray(m)))


def hermitian_defect(m):
    """Largest modulus of M - M* over all entries."""
    a = np.asarray(m)
    return max_abs(a - a.conj().T)


def make_hermitian(m, tol=None):
    """Return (M + M*)/2 after checking the asymmetry defect against ``tol``.

    ``tol`` defaults to ``HERMITIZE_TOL * max(1, max_abs(M))``.  The result
    has an exactly real diagonal.
    """
    a = as_complex_matrix(m)
    if tol is None:
        tol = HERMITIZE_TOL * max(1.0, max_abs(a))
    defect = hermitian_defect(a)
    if defect > tol:
        raise NotHermitianError(defect, tol)
    h = 0.5 * (a + a.conj().T)
    np.fill_diagonal(h, h.diagonal().real)
    return h


class EigenDecomposition(NamedTuple):
    """Ascending eigenvalues with matching unit eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int


def eig_hermitian(h, max_sweeps=MAX_SWEEPS):
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    The input is hermitized first (with the default tolerance), so callers
    may pass products that are Hermitian only up to rounding.  Raises
    ConvergenceError if the off-diagonal mass has not dropped to
    ``OFF_DIAGONAL_TOL`` times the Frobenius norm after ``max_sweeps``
    sweeps.
    """
    work = make_hermitian(h)
    n = work.shape[0]
    v = np.eye(n, dtype=np.complex128)
    # Entries below the rotation skip threshold can never be annihilated, so
    # the reachable off-norm is floored at n times the skip level; without the
    # floor a noise-level matrix stalls against an unreachable target.
    target = max(OFF_DIAGONAL_TOL * frobenius_norm(work), ROTATION_SKIP * n)
    sweeps, off = _backend.jacobi_sweeps(work, v, target, max_sweeps, ROTATION_SKIP)
    if off > target:
        raise ConvergenceError(
            f"off-diagonal norm {off:.3e} above target {target:.3e} after {sweeps} sweeps"
        )
    values = work.diagonal().real.copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values[order], np.ascontiguousarray(v[:, order]), sweeps)


def min_eigenvalue(h):
    return float(eig_hermitian(h).eigenvalues[0])


def cholesky(h):
    """Lower Cholesky factor with real positive diagonal, L L* = H.

    Raises NotPositiveDefiniteError when a pivot falls at or below
    ``CHOLESKY_PIVOT_TOL * max(1, max diagonal)``.
    """
    work = make_hermitian(h)
    n = work.shape[0]
    diag_max = float(work.diagonal().real.max()) if n else 0.0
    floor = CHOLESKY_PIVOT_TOL * max(1.0, diag_max)
    l = np.zeros_like(work)
    fail = _backend.cholesky_factor(work, l, floor)
    if fail >= 0:
        row = np.asarray(l)[fail, :fail]
        pivot = float(work[fail, fail].real - np.real(np.vdot(row, row)))
        raise NotPositiveDefiniteError(fail, pivot)
    return l


def solve_lower_triangular(l, b):
    """Solve L X = B by forward substitution; B may have several columns."""
    l = np.asarray(l)
    x = np.array(b, dtype=np.complex128)
    vector = x.ndim == 1
    if vector:
        x = x[:, None]
    for i in range(l.shape[0]):
        x[i] -= l[i, :i] @ x[:i]
        x[i] /= l[i, i]
    return x[:, 0] if vector else x


def pencil_max_eig(b, g):
    """Largest λ with det(B - λ G) = 0, for Hermitian B and G positive definite.

    Whitens by the Cholesky factor of G: with G = L L*, the pencil eigenvalues
    are those of W = L⁻¹ B L⁻*, computed as two triangular solves.
    """
    bm = make_hermitian(b)
    l = cholesky(g)
    x = solve_lower_triangular(l, bm)
    w = solve_lower_triangular(l, x.conj().T).conj().T
    decomp = eig_hermitian(w)
    return float(decomp.eigenvalues[-1])
