"""Dense adjacency matrices, exact trace-power moments, and eigenvalues.

Trace powers count closed walks and are computed in exact integer
arithmetic: the float64 BLAS path is used only while every intermediate
count is below 2**53, where float64 addition of integers is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParamsError, NoConvergenceError, OrderTooLargeError
from .graph import Graph

__all__ = [
    "Histogram",
    "adjacency_matrix",
    "trace_power",
    "moment",
    "eigenvalues",
    "spectral_histogram",
    "triangle_count",
]

DEFAULT_BINS = 101  # odd, so a bin is centered at 0 for symmetric spectra


@dataclass(frozen=True)
class Histogram:
    """Equal-width eigenvalue histogram; counts sum to the matrix order."""

    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]
    normalization: int


def adjacency_matrix(graph: Graph) -> np.ndarray:
    """Symmetric 0/1 matrix with zero diagonal; entry (i, j) = 1 iff {i, j} is an edge."""
    a = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, nbrs in enumerate(graph.neighbors):
        a[u, list(nbrs)] = 1
    return a


def _check_adjacency(matrix: np.ndarray) -> np.ndarray:
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidParamsError("matrix must be square")
    if not np.issubdtype(a.dtype, np.integer):
        if not np.all(a == np.round(a)):
            raise InvalidParamsError("trace_power requires an integer matrix")
        a = a.astype(np.int64)
    return a


def trace_power(matrix: np.ndarray, l: int) -> int:
    """Tr(A^l) as an exact integer (the number of closed walks of length l).

    Entries of A^m are bounded by n**(m-1) for a 0/1 matrix, so results are
    computed via float64 BLAS while n**l < 2**53 (exact there), via int64
    products while n**l < 2**63, and refused beyond that.
    """
    if l < 1:
        raise InvalidParamsError(f"power must be >= 1, got {l}")
    a = _check_adjacency(matrix)
    if np.any((a != 0) & (a != 1)):
        raise InvalidParamsError("trace_power expects a 0/1 adjacency matrix")
    n = a.shape[0]
    if l == 1:
        return int(np.trace(a))
    bound = n**l
    if bound < 2**53:
        m = a.astype(np.float64)
        r = m
        for _ in range(l - 2):
            r = r @ m
        # Tr(A^l) = sum_ij (A^{l-1})_ij * A_ij avoids one full product.
        return int(round(float(np.sum(r * m))))
    if bound < 2**63:
        r = a
        for _ in range(l - 2):
            r = r @ a
        return int(np.sum(r * a))
    raise OrderTooLargeError(
        f"Tr(A^{l}) at n={n} may exceed 63-bit integers; no big-integer path"
    )


def moment(matrix: np.ndarray, l: int) -> float:
    """l-th spectral moment: Tr(A^l) / n."""
    a = np.asarray(matrix)
    return trace_power(a, l) / a.shape[0]


def eigenvalues(
    matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 60
) -> np.ndarray:
    """Full real spectrum of a symmetric matrix, ascending.

    Cyclic Jacobi rotation sweeps; converged when the off-diagonal Frobenius
    norm drops below ``tol`` times the matrix Frobenius norm.  Raises
    NoConvergenceError if the sweep budget is exhausted.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidParamsError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise InvalidParamsError("matrix must be symmetric")
    n = a.shape[0]
    if n == 1:
        return a[0].copy()
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return np.zeros(n)
    stop = tol * fro
    # Rotations below `skip` are deferred; n^2 such entries still keep the
    # off-diagonal norm within `stop`, so the convergence test stays honest.
    skip = stop / n
    for _ in range(max_sweeps):
        off_part = a.copy()
        np.fill_diagonal(off_part, 0.0)
        if float(np.linalg.norm(off_part)) <= stop:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise NoConvergenceError(f"Jacobi sweeps exhausted ({max_sweeps}) at n={n}")


def spectral_histogram(spectrum: np.ndarray, bins: int = DEFAULT_BINS) -> Histogram:
    """Equal-width histogram over [min - eps, max + eps] covering all values."""
    values = np.asarray(spectrum, dtype=np.float64)
    if values.size == 0:
        raise InvalidParamsError("spectrum must be nonempty")
    if bins < 1:
        raise InvalidParamsError(f"bins must be >= 1, got {bins}")
    lo = float(values.min())
    hi = float(values.max())
    eps = 1e-9 * (hi - lo + 1.0)
    edges = np.linspace(lo - eps, hi + eps, bins + 1)
    counts, _ = np.histogram(values, edges)
    return Histogram(
        bin_edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
        normalization=int(values.size),
    )


def triangle_count(graph: Graph) -> int:
    """Number of vertex triples that are mutually adjacent.

    Each triangle contributes two closed 3-walks at each of its three
    vertices, so 6 * triangle_count(g) == trace_power(A, 3).
    """
    sets = [set(nbrs) for nbrs in graph.neighbors]
    total = 0
    for u in range(graph.n):
        for v in graph.neighbors[u]:
            if v > u:
                total += len(sets[u] & sets[v])
    # Every triangle is counted once per edge.
    return total // 3
