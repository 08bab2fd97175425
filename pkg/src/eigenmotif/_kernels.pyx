# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi eigensolver for dense real symmetric matrices (compiled core).

Classic cyclic-by-row Jacobi with the usual threshold schedule: rotations
below 0.2*sm/n^2 are skipped during the first three sweeps, and entries that
are negligible relative to both diagonal elements are squashed to zero after
the fourth.  Convergence is quadratic; the sweep limit is a fail-safe only.
"""

from libc.math cimport fabs, sqrt

import numpy as np


def jacobi_eigh(a, int max_sweeps=60):
    """Eigendecompose a real symmetric matrix.

    Returns ``(w, v)`` with eigenvalues ``w`` ascending and orthonormal
    eigenvectors in the columns of ``v``, so that a @ v[:, k] == w[k] * v[:, k].
    Only the upper triangle of ``a`` is read.
    """
    A = np.array(a, dtype=np.float64, order="C", copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    cdef Py_ssize_t n = A.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    V = np.eye(n, dtype=np.float64)
    d_arr = np.array(np.diagonal(A), dtype=np.float64, copy=True)
    if n == 1:
        return d_arr, V
    b_arr = d_arr.copy()
    z_arr = np.zeros(n, dtype=np.float64)

    cdef double[:, ::1] m = A
    cdef double[:, ::1] v = V
    cdef double[::1] d = d_arr
    cdef double[::1] acc = b_arr
    cdef double[::1] z = z_arr

    cdef Py_ssize_t p, q, j, sweep
    cdef bint converged = False
    cdef double sm, thresh, g, h, t, theta, c, s, tau, mpq, gj, hj

    for sweep in range(1, max_sweeps + 1):
        sm = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                sm += fabs(m[p, q])
        if sm == 0.0:
            converged = True
            break
        thresh = 0.2 * sm / (n * n) if sweep < 4 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                mpq = m[p, q]
                g = 100.0 * fabs(mpq)
                if sweep > 4 and fabs(d[p]) + g == fabs(d[p]) and fabs(d[q]) + g == fabs(d[q]):
                    m[p, q] = 0.0
                elif fabs(mpq) > thresh:
                    h = d[q] - d[p]
                    if fabs(h) + g == fabs(h):
                        t = mpq / h
                    else:
                        theta = 0.5 * h / mpq
                        t = 1.0 / (fabs(theta) + sqrt(1.0 + theta * theta))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    tau = s / (1.0 + c)
                    h = t * mpq
                    z[p] -= h
                    z[q] += h
                    d[p] -= h
                    d[q] += h
                    m[p, q] = 0.0
                    for j in range(p):
                        gj = m[j, p]
                        hj = m[j, q]
                        m[j, p] = gj - s * (hj + gj * tau)
                        m[j, q] = hj + s * (gj - hj * tau)
                    for j in range(p + 1, q):
                        gj = m[p, j]
                        hj = m[j, q]
                        m[p, j] = gj - s * (hj + gj * tau)
                        m[j, q] = hj + s * (gj - hj * tau)
                    for j in range(q + 1, n):
                        gj = m[p, j]
                        hj = m[q, j]
                        m[p, j] = gj - s * (hj + gj * tau)
                        m[q, j] = hj + s * (gj - hj * tau)
                    for j in range(n):
                        gj = v[j, p]
                        hj = v[j, q]
                        v[j, p] = gj - s * (hj + gj * tau)
                        v[j, q] = hj + s * (gj - hj * tau)
        for p in range(n):
            acc[p] += z[p]
            d[p] = acc[p]
            z[p] = 0.0

    if not converged:
        raise RuntimeError("Jacobi rotation sweeps did not converge")

    order = np.argsort(d_arr, kind="stable")
    return d_arr[order], V[:, order]
