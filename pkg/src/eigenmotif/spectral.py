"""Normalized Laplacian spectra and residual checks.

Two equivalent operator forms appear throughout: the random-walk form

    (delta f)(x) = f(x) - (1/deg x) * sum of f over the neighbors of x,

whose eigenfunctions are the natural objects for the evolution
operations, and the symmetric matrix I - D^{-1/2} A D^{-1/2}, which has
the same eigenvalues and is what actually gets decomposed.  An
eigenvector v of the symmetric form corresponds to the eigenfunction
f = D^{-1/2} v.  All residual checks are phrased directly against the
random-walk form so that claimed eigenfunctions are tested in the shape
they are stated, not through a similarity transform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .kernels import BACKEND, jacobi_eigh

GROUP_TOL = 1e-8


def residual_tol(n: int) -> float:
    """Default eigenpair residual tolerance, scaled by matrix order."""
    return 1e-9 * n


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def normalized_laplacian(g: Graph) -> np.ndarray:
    """The symmetric form I - D^{-1/2} A D^{-1/2}.

    Requires minimum degree 1; an isolated vertex has no normalized
    Laplacian row.
    """
    for v in range(g.n):
        if g.degree(v) == 0:
            raise ValueError(f"vertex {v} is isolated; normalized Laplacian undefined")
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    lap = -adjacency_matrix(g) * np.outer(inv_sqrt, inv_sqrt)
    np.fill_diagonal(lap, 1.0)
    return lap


def group_eigenvalues(values: np.ndarray, tol: float) -> list[tuple[float, int]]:
    """Single-linkage clustering of sorted values: split where a gap exceeds tol.

    Returns (group mean, count) pairs in ascending order.
    """
    vals = np.sort(np.asarray(values, dtype=float))
    groups: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > tol:
            chunk = vals[start:i]
            groups.append((float(chunk.mean()), len(chunk)))
            start = i
    return groups


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    group_tol: float = GROUP_TOL

    def multiplicity(self, lam: float) -> int:
        return int(np.count_nonzero(np.abs(self.eigenvalues - lam) <= self.group_tol))

    def groups(self) -> list[tuple[float, int]]:
        return group_eigenvalues(self.eigenvalues, self.group_tol)

    def __len__(self) -> int:
        return len(self.eigenvalues)


def eigendecompose(matrix: np.ndarray, group_tol: float = GROUP_TOL,
                   check_tol: float | None = None) -> Spectrum:
    """Dense symmetric eigendecomposition via cyclic Jacobi rotations.

    Rejects non-finite or non-symmetric input, and verifies the residual
    ``max |M v - lambda v|`` of every returned pair against ``check_tol``
    (default: residual_tol(n)).
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    scale = max(1.0, float(np.abs(m).max()))
    if np.abs(m - m.T).max() > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    sym = (m + m.T) / 2.0
    w, v = jacobi_eigh(sym)
    n = sym.shape[0]
    tol = residual_tol(n) if check_tol is None else check_tol
    worst = float(np.abs(sym @ v - v * w).max())
    if worst > tol:
        raise RuntimeError(f"eigendecomposition residual {worst:g} exceeds {tol:g}")
    return Spectrum(w, v, group_tol)


def laplacian_spectrum(g: Graph, group_tol: float = GROUP_TOL) -> Spectrum:
    return eigendecompose(normalized_laplacian(g), group_tol)


def multiplicity(spectrum: Spectrum, lam: float) -> int:
    """Count of eigenvalues within group_tol of lam."""
    return spectrum.multiplicity(lam)


def delta_apply(g: Graph, f: np.ndarray) -> np.ndarray:
    """Apply the random-walk Laplacian: f(x) minus the neighbor average."""
    vec = np.asarray(f, dtype=float)
    if vec.shape != (g.n,):
        raise ValueError(f"expected a vector of length {g.n}")
    out = np.empty(g.n)
    for x in range(g.n):
        deg = g.degree(x)
        if deg == 0:
            raise ValueError(f"vertex {x} is isolated; neighbor average undefined")
        out[x] = vec[x] - sum(vec[w] for w in g.neighbors(x)) / deg
    return out


def eigen_residual(g: Graph, f: np.ndarray, lam: float) -> float:
    """Sup-norm defect of the eigenfunction equation, scale-invariant.

    max over x of |neighbor-average(f)(x) - (1 - lam) f(x)|, divided by
    the sup norm of f.  Zero iff f is exactly an eigenfunction for lam.
    """
    vec = np.asarray(f, dtype=float)
    if vec.shape != (g.n,):
        raise ValueError(f"expected a vector of length {g.n}")
    norm = float(np.abs(vec).max())
    if norm == 0.0:
        raise ValueError("zero vector has no eigenfunction residual")
    worst = 0.0
    for x in range(g.n):
        deg = g.degree(x)
        if deg == 0:
            raise ValueError(f"vertex {x} is isolated; neighbor average undefined")
        avg = sum(vec[w] for w in g.neighbors(x)) / deg
        worst = max(worst, abs(avg - (1.0 - lam) * vec[x]))
    return worst / norm


def weighted_inner_product(g: Graph, f: np.ndarray, h: np.ndarray) -> float:
    """Degree-weighted inner product: sum of deg(x) f(x) h(x)."""
    a = np.asarray(f, dtype=float)
    b = np.asarray(h, dtype=float)
    if a.shape != (g.n,) or b.shape != (g.n,):
        raise ValueError(f"expected vectors of length {g.n}")
    return float(np.sum(np.asarray(g.degrees, dtype=float) * a * b))


def adjacency_nullity(g: Graph, group_tol: float = GROUP_TOL) -> int:
    """Kernel dimension of the adjacency matrix.

    Decomposes the adjacency matrix itself and counts eigenvalues within
    group_tol of zero.  By inertia this equals the multiplicity of
    eigenvalue 1 of the normalized Laplacian, which makes it a useful
    cross-check computed from a different matrix.
    """
    spec = eigendecompose(adjacency_matrix(g), group_tol)
    return spec.multiplicity(0.0)


__all__ = [
    "BACKEND",
    "GROUP_TOL",
    "Spectrum",
    "adjacency_matrix",
    "adjacency_nullity",
    "delta_apply",
    "eigen_residual",
    "eigendecompose",
    "group_eigenvalues",
    "laplacian_spectrum",
    "multiplicity",
    "normalized_laplacian",
    "residual_tol",
    "weighted_inner_product",
]
