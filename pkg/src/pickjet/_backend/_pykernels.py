"""Plain-numpy fallback for the compiled rotation/factorization kernels.

Same algorithms, same sweep ordering and thresholds as ``_ckernels``; row and
column updates are vectorized but the rotation sequence is identical, so the
two backends agree to rounding error.
"""

import math

import numpy as np


def off_diagonal_norm(h):
    """Frobenius norm of the off-diagonal part, summed without cancellation."""
    m = np.abs(h) ** 2
    np.fill_diagonal(m, 0.0)
    return math.sqrt(float(m.sum()))


def jacobi_sweeps(h, v, frob_tol, max_sweeps, skip_threshold):
    """Cyclic Jacobi diagonalization of a Hermitian matrix, in place.

    ``h`` is driven toward diagonal form while the accumulated unitary is
    multiplied into ``v`` (so on convergence the columns of ``v`` are
    eigenvectors and the real diagonal of ``h`` carries the eigenvalues).
    Stops once the off-diagonal Frobenius norm drops to ``frob_tol`` or after
    ``max_sweeps`` full sweeps; rotations on entries smaller in modulus than
    ``skip_threshold`` are skipped.  Returns ``(sweeps, off_norm)``.
    """
    n = h.shape[0]
    sweeps = 0
    off = off_diagonal_norm(h)
    while off > frob_tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = h[p, q]
                r = abs(apq)
                if r < skip_threshold:
                    continue
                app = h[p, p].real
                aqq = h[q, q].real
                theta = (app - aqq) / (2.0 * r)
                t = -math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = (t * c) * (apq / r)
                sc = s.conjugate()
                hp = h[p, :].copy()
                hq = h[q, :].copy()
                h[p, :] = c * hp - s * hq
                h[q, :] = sc * hp + c * hq
                hp = h[:, p].copy()
                hq = h[:, q].copy()
                h[:, p] = c * hp - sc * hq
                h[:, q] = s * hp + c * hq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - sc * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = off_diagonal_norm(h)
    return sweeps, off


def cholesky_factor(h, l, pivot_floor):
    """Fill ``l`` with the lower Cholesky factor of Hermitian ``h``.

    The diagonal of ``l`` is real and positive.  Returns the index of the
    first pivot at or below ``pivot_floor``, or -1 on success (in which case
    ``l @ l.conj().T`` reproduces ``h``).
    """
    n = h.shape[0]
    for j in range(n):
        row = l[j, :j]
        d = h[j, j].real - float(np.real(np.vdot(row, row)))
        if d <= pivot_floor:
            return j
        d = math.sqrt(d)
        l[j, j] = d
        if j + 1 < n:
            l[j + 1 :, j] = (h[j + 1 :, j] - l[j + 1 :, :j] @ row.conjugate()) / d
    return -1
