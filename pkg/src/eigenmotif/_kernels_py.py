"""Pure-numpy fallback for the cyclic Jacobi eigensolver.

Same algorithm as the compiled ``_kernels`` extension, with each plane
rotation applied to whole rows/columns via numpy slicing.  Used when the
extension is not built (or when EIGENMOTIF_BACKEND=python forces it).
"""

import math

import numpy as np


def jacobi_eigh(a, max_sweeps=60):
    """Eigendecompose a real symmetric matrix.

    Returns ``(w, v)`` with eigenvalues ``w`` ascending and orthonormal
    eigenvectors in the columns of ``v``, so that a @ v[:, k] == w[k] * v[:, k].
    """
    A = np.array(a, dtype=np.float64, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    n = A.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    V = np.eye(n)
    if n == 1:
        return A.diagonal().copy(), V

    upper = np.triu_indices(n, k=1)
    converged = False
    for sweep in range(1, max_sweeps + 1):
        sm = float(np.abs(A[upper]).sum())
        if sm == 0.0:
            converged = True
            break
        thresh = 0.2 * sm / (n * n) if sweep < 4 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                g = 100.0 * abs(apq)
                if sweep > 4 and abs(A[p, p]) + g == abs(A[p, p]) and abs(A[q, q]) + g == abs(A[q, q]):
                    A[p, q] = A[q, p] = 0.0
                    continue
                if abs(apq) <= thresh:
                    continue
                h = A[q, q] - A[p, p]
                if abs(h) + g == abs(h):
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # two-sided plane rotation zeroing A[p, q]
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
                vec_p = V[:, p].copy()
                vec_q = V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q

    if not converged:
        raise RuntimeError("Jacobi rotation sweeps did not converge")

    w = A.diagonal().copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]
