"""Pairwise distances, k-nearest-neighbor local scaling, affinities, and the
graph Laplacian.

The affinity between two samples is exp(-||x_i - x_j||^2 / (sigma_i sigma_j))
where sigma_i is the distance from sample i to its k-th nearest neighbor.
Scaling every bandwidth by the local neighborhood size makes the graph adapt
to density variations.  All matrices built here are exactly symmetric: the
squared-distance matrix is assembled from commutative sums so (i, j) and
(j, i) round identically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadK
from .validate import as_data_matrix


# Distances come from explicit coordinate differences rather than the Gram
# expansion: no cancellation, exact symmetry, exact zero self-distance, and
# the pairwise/cross paths agree bit for bit on coincident inputs (which the
# kernel transform's round-trip contract relies on).  Blocked to bound the
# (block, n, d) temporary.
_BLOCK_ROWS = 256


def _sqdist_blocks(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.empty((a.shape[0], b.shape[0]))
    for start in range(0, a.shape[0], _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, a.shape[0])
        diff = a[start:stop, None, :] - b[None, :, :]
        out[start:stop] = np.einsum("ijk,ijk->ij", diff, diff)
    return out


def pairwise_sqdist(x) -> np.ndarray:
    """Squared Euclidean distances between all sample pairs.

    Returns an (n, n) matrix with exact zero diagonal, exact symmetry, and
    no negative entries.
    """
    x = as_data_matrix(x)
    return _sqdist_blocks(x, x)


def cross_sqdist(a, b) -> np.ndarray:
    """Squared Euclidean distances between rows of ``a`` and rows of ``b``."""
    a = as_data_matrix(a, "a")
    b = as_data_matrix(b, "b")
    if a.shape[1] != b.shape[1]:
        raise ValueError(
            f"feature counts differ: {a.shape[1]} vs {b.shape[1]}"
        )
    return _sqdist_blocks(a, b)


def local_sigmas_from_sqdist(d2: np.ndarray, k: int) -> np.ndarray:
    """Per-sample bandwidths from a precomputed squared-distance matrix."""
    n = d2.shape[0]
    if not 1 <= k <= n - 1:
        raise BadK(f"k={k} outside 1..{n - 1} for n={n} samples")
    work = d2.copy()
    np.fill_diagonal(work, np.inf)
    work.sort(axis=1)
    return np.sqrt(work[:, k - 1])


def local_sigmas(x, k: int) -> np.ndarray:
    """Distance from each sample to its k-th nearest neighbor.

    The sample itself is excluded; coincident neighbors keep distance zero,
    so duplicated points can yield sigma = 0 (handled downstream, not an
    error).  Equidistant neighbors are interchangeable here because only
    the k-th distance value is used.
    """
    return local_sigmas_from_sqdist(pairwise_sqdist(x), k)


def local_scaling_affinity_from_sqdist(d2: np.ndarray, k: int) -> np.ndarray:
    """Affinity matrix from a precomputed squared-distance matrix."""
    sigmas = local_sigmas_from_sqdist(d2, k)
    scale = np.outer(sigmas, sigmas)
    with np.errstate(divide="ignore", invalid="ignore"):
        a = np.exp(-d2 / scale)
    # Continuous limits for zero bandwidths: affinity 1 for coincident
    # pairs, 0 for everything else.
    degenerate = scale == 0.0
    a[degenerate & (d2 == 0.0)] = 1.0
    a[degenerate & (d2 > 0.0)] = 0.0
    return a


def local_scaling_affinity(x, k: int) -> np.ndarray:
    """Dense affinity matrix A with A[i, j] = exp(-d2_ij / (sigma_i sigma_j)).

    Entries lie in [0, 1] with a unit diagonal; the matrix is exactly
    symmetric.
    """
    return local_scaling_affinity_from_sqdist(pairwise_sqdist(x), k)


@dataclass(frozen=True)
class LaplacianPair:
    """Degree vector and Laplacian L = D - A of an affinity matrix."""

    degree: np.ndarray
    laplacian: np.ndarray


def laplacian(a) -> LaplacianPair:
    """Degree matrix diagonal and graph Laplacian of a symmetric matrix."""
    a = np.asarray(a, dtype=np.float64)
    degree = a.sum(axis=1)
    lap = np.diag(degree) - a
    return LaplacianPair(degree=degree, laplacian=lap)
