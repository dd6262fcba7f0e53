# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled rotation/factorization kernels.

Mirrors ``_pykernels`` operation for operation; only the loop scheduling is
written out by hand so the rotations run without temporaries.
"""

from libc.math cimport copysign, fabs, hypot, sqrt


cdef double _off_diagonal_norm(double complex[:, ::1] h) nogil:
    cdef Py_ssize_t n = h.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    cdef double complex z
    for i in range(n):
        for j in range(n):
            if i != j:
                z = h[i, j]
                acc += z.real * z.real + z.imag * z.imag
    return sqrt(acc)


def off_diagonal_norm(double complex[:, ::1] h):
    """Frobenius norm of the off-diagonal part, summed without cancellation."""
    return _off_diagonal_norm(h)


def jacobi_sweeps(double complex[:, ::1] h, double complex[:, ::1] v,
                  double frob_tol, int max_sweeps, double skip_threshold):
    """Cyclic Jacobi diagonalization of a Hermitian matrix, in place.

    Same contract as the python backend: ``h`` is driven toward diagonal
    form, the accumulated unitary is multiplied into ``v``, and the return
    value is ``(sweeps, off_norm)``.
    """
    cdef Py_ssize_t n = h.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweeps = 0
    cdef double off, r, app, aqq, theta, t, c
    cdef double complex apq, s, sc, hp, hq
    off = _off_diagonal_norm(h)
    with nogil:
        while off > frob_tol and sweeps < max_sweeps:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = h[p, q]
                    r = hypot(apq.real, apq.imag)
                    if r < skip_threshold:
                        continue
                    app = h[p, p].real
                    aqq = h[q, q].real
                    theta = (app - aqq) / (2.0 * r)
                    t = -copysign(1.0, theta) / (fabs(theta) + hypot(theta, 1.0))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = (t * c) * (apq / r)
                    sc = s.conjugate()
                    for k in range(n):
                        hp = h[p, k]
                        hq = h[q, k]
                        h[p, k] = c * hp - s * hq
                        h[q, k] = sc * hp + c * hq
                    for k in range(n):
                        hp = h[k, p]
                        hq = h[k, q]
                        h[k, p] = c * hp - sc * hq
                        h[k, q] = s * hp + c * hq
                    h[p, q] = 0.0
                    h[q, p] = 0.0
                    h[p, p] = h[p, p].real
                    h[q, q] = h[q, q].real
                    for k in range(n):
                        hp = v[k, p]
                        hq = v[k, q]
                        v[k, p] = c * hp - sc * hq
                        v[k, q] = s * hp + c * hq
            sweeps += 1
            off = _off_diagonal_norm(h)
    return sweeps, off


def cholesky_factor(double complex[:, ::1] h, double complex[:, ::1] l,
                    double pivot_floor):
    """Fill ``l`` with the lower Cholesky factor of Hermitian ``h``.

    Returns the index of the first pivot at or below ``pivot_floor``, or -1
    on success.
    """
    cdef Py_ssize_t n = h.shape[0]
    cdef Py_ssize_t i, j, k
    cdef Py_ssize_t fail = -1
    cdef double d
    cdef double complex acc
    with nogil:
        for j in range(n):
            d = h[j, j].real
            for k in range(j):
                acc = l[j, k]
                d -= acc.real * acc.real + acc.imag * acc.imag
            if d <= pivot_floor:
                fail = j
                break
            d = sqrt(d)
            l[j, j] = d
            for i in range(j + 1, n):
                acc = h[i, j]
                for k in range(j):
                    acc -= l[i, k] * l[j, k].conjugate()
                l[i, j] = acc / d
    return fail
