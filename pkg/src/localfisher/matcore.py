"""Dense symmetric linear algebra: Cholesky, eigendecomposition, and the
symmetric-definite generalized eigenproblem solved by Cholesky reduction.

All functions symmetrize their inputs by averaging with the transpose, so
callers may pass matrices that are symmetric only up to round-off.  Results
follow a fixed ordering and sign convention so that identical inputs produce
bit-identical outputs:

* eigenvalues are sorted descending, exact ties keeping the backend's order;
* each eigenvector column is flipped so its largest-magnitude entry is
  positive, ties broken by the lowest row index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_triangular

from .errors import BadRank, ConvergenceFailure, NotPositiveDefinite

# Ridge escalation schedule for nearly singular constraint matrices:
# epsilon * mean(diag(W)), retried at x100 steps.
RIDGE_EPSILONS = (1e-9, 1e-7, 1e-5, 1e-3)


def symmetrize(matrix) -> np.ndarray:
    """Return 0.5 * (M + M^T) as a float64 array, validating squareness."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValueError("matrix must have dimension >= 1")
    return 0.5 * (m + m.T)


@dataclass(frozen=True)
class EigenSolution:
    """Eigenpairs in descending-eigenvalue order.

    ``vectors[:, i]`` belongs to ``values[i]`` and has unit norm in the
    solve's inner product: Euclidean for the standard problem, W-norm for
    the generalized one.  ``ridge`` records the diagonal shift applied to
    the constraint matrix (0.0 when none was needed).
    """

    values: np.ndarray
    vectors: np.ndarray
    ridge: float = field(default=0.0)


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-|entry| is positive (first index on ties)."""
    anchor = np.argmax(np.abs(vectors), axis=0)
    picked = vectors[anchor, np.arange(vectors.shape[1])]
    signs = np.where(picked < 0.0, -1.0, 1.0)
    return vectors * signs


def _descending(values: np.ndarray, vectors: np.ndarray):
    # LAPACK returns ascending values; stable sort keeps its order on ties.
    order = np.argsort(-values, kind="stable")
    return values[order], vectors[:, order]


def cholesky(matrix) -> np.ndarray:
    """Lower-triangular L with S = L L^T and strictly positive diagonal.

    Raises
    ------
    NotPositiveDefinite
        If a pivot is non-positive.  Callers that can tolerate singular
        inputs should retry with a ridge (see :func:`gen_sym_eigen`).
    """
    s = symmetrize(matrix)
    try:
        return np.linalg.cholesky(s)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite(
            f"matrix of dim {s.shape[0]} is not positive definite: {exc}"
        ) from None


def sym_eigen(matrix) -> EigenSolution:
    """Full eigendecomposition of a symmetric matrix.

    Returns descending eigenvalues with mutually orthonormal, sign-fixed
    eigenvector columns.
    """
    s = symmetrize(matrix)
    try:
        values, vectors = np.linalg.eigh(s)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"symmetric eigensolver failed: {exc}") from None
    values, vectors = _descending(values, vectors)
    return EigenSolution(values=values, vectors=_fix_signs(vectors))


def gen_sym_eigen(b, w, r: int) -> EigenSolution:
    """Top ``r`` pairs of the generalized problem B phi = lambda W phi.

    W must be positive definite, possibly after a small ridge: on a failed
    factorization the solver retries with W + eps * mean(diag(W)) * I for
    eps in ``RIDGE_EPSILONS`` and gives up past the last step.  Solved by
    Cholesky reduction W = L L^T followed by a standard eigendecomposition
    of L^-1 B L^-T; eigenvectors are W-orthonormal (for the ridged W when a
    ridge was applied).
    """
    b = symmetrize(b)
    w = symmetrize(w)
    if b.shape != w.shape:
        raise ValueError(f"shape mismatch: B is {b.shape}, W is {w.shape}")
    dim = b.shape[0]
    if not 1 <= r <= dim:
        raise BadRank(f"rank r={r} outside 1..{dim}")

    # mean(diag) sets the ridge scale; an all-zero diagonal would make the
    # ridge a no-op, so fall back to 1.
    scale = float(np.mean(np.diag(w)))
    if not np.isfinite(scale) or scale <= 0.0:
        scale = 1.0

    ridge = 0.0
    try:
        lower = cholesky(w)
    except NotPositiveDefinite:
        lower = None
        for eps in RIDGE_EPSILONS:
            try:
                lower = cholesky(w + (eps * scale) * np.eye(dim))
                ridge = eps * scale
                break
            except NotPositiveDefinite:
                continue
        if lower is None:
            raise NotPositiveDefinite(
                "constraint matrix is not positive definite even after "
                f"ridge escalation up to {RIDGE_EPSILONS[-1] * scale:g}"
            )

    reduced = solve_triangular(lower, b, lower=True)
    reduced = solve_triangular(lower, reduced.T, lower=True).T
    inner = sym_eigen(reduced)
    vectors = solve_triangular(lower, inner.vectors, lower=True, trans="T")
    vectors = _fix_signs(vectors)
    return EigenSolution(
        values=inner.values[:r].copy(),
        vectors=vectors[:, :r].copy(),
        ridge=ridge,
    )
