"""Slow, literal baseline methods: brute-force pairwise scatter, Fisher
discriminant analysis, locality-preserving projection, and PCA.

These exist to cross-check the fast paths and to give users classical
baselines.  They are deliberately naive: explicit loops, no algebraic
shortcuts, and no shared scatter-assembly code with the main pipeline.
They do share the eigensolver in :mod:`localfisher.matcore`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .affinity import laplacian, pairwise_sqdist
from .errors import BadK, BadRank
from .labels import encode_labels
from .matcore import gen_sym_eigen, sym_eigen, symmetrize
from .validate import as_data_matrix


@dataclass(frozen=True)
class ClassStats:
    """Per-class means, the overall labeled mean, and class counts."""

    class_means: np.ndarray
    global_mean: np.ndarray
    class_counts: np.ndarray


def class_stats(x, y) -> ClassStats:
    x = as_data_matrix(x)
    enc = encode_labels(y).require_full()
    means = np.stack([x[enc.indices == c].mean(axis=0) for c in range(len(enc.classes))])
    return ClassStats(
        class_means=means,
        global_mean=x.mean(axis=0),
        class_counts=enc.counts.copy(),
    )


def brute_scatter(x, w) -> np.ndarray:
    """Pairwise scatter 1/2 sum_ij W_ij (x_i - x_j)(x_i - x_j)^T, by the
    explicit double loop."""
    x = as_data_matrix(x)
    w = np.asarray(w, dtype=np.float64)
    n, d = x.shape
    scatter = np.zeros((d, d))
    for i in range(n):
        for j in range(n):
            diff = x[i] - x[j]
            scatter += (0.5 * w[i, j]) * np.outer(diff, diff)
    return scatter


def fda_fit(x, y, r: int) -> np.ndarray:
    """Classical Fisher discriminant directions (plain eigenvectors).

    Scatters use the class-mean form: within sums squared deviations from
    each class mean, between sums n_c-weighted deviations of class means
    from the overall mean.
    """
    x = as_data_matrix(x)
    enc = encode_labels(y).require_full()
    n, d = x.shape
    if not 1 <= r <= d:
        raise BadRank(f"r={r} outside 1..{d}")
    stats = class_stats(x, enc)
    s_within = np.zeros((d, d))
    s_between = np.zeros((d, d))
    for c in range(len(enc.classes)):
        mean_c = stats.class_means[c]
        for row in x[enc.indices == c]:
            diff = row - mean_c
            s_within += np.outer(diff, diff)
        gap = mean_c - stats.global_mean
        s_between += enc.counts[c] * np.outer(gap, gap)
    solution = gen_sym_eigen(s_between, s_within, r)
    return solution.vectors


def binary_knn_affinity(x, k: int) -> np.ndarray:
    """0/1 affinity: 1 when either sample is among the other's k nearest.

    Distance ties are broken toward the lower sample index.
    """
    d2 = pairwise_sqdist(x)
    n = d2.shape[0]
    if not 1 <= k <= n - 1:
        raise BadK(f"k={k} outside 1..{n - 1} for n={n} samples")
    np.fill_diagonal(d2, np.inf)
    a = np.zeros((n, n))
    for i in range(n):
        neighbors = np.argsort(d2[i], kind="stable")[:k]
        a[i, neighbors] = 1.0
    return np.maximum(a, a.T)


def lpp_fit(x, k: int, r: int) -> np.ndarray:
    """Locality-preserving projection directions.

    Solves X^T L X phi = lambda X^T D X phi on the binary neighbor graph
    and keeps the eigenvectors of the r smallest eigenvalues, ordered from
    larger to smaller.
    """
    x = as_data_matrix(x)
    d = x.shape[1]
    if not 1 <= r <= d:
        raise BadRank(f"r={r} outside 1..{d}")
    a = binary_knn_affinity(x, k)
    pair = laplacian(a)
    b = symmetrize(x.T @ pair.laplacian @ x)
    w = symmetrize(x.T @ (pair.degree[:, None] * x))
    solution = gen_sym_eigen(b, w, d)
    return solution.vectors[:, d - r:]


def pca_fit(x, r: int) -> np.ndarray:
    """Top-r principal directions of the total scatter, assembled by the
    definitional sum of outer products."""
    x = as_data_matrix(x)
    n, d = x.shape
    if not 1 <= r <= d:
        raise BadRank(f"r={r} outside 1..{d}")
    mean = x.mean(axis=0)
    scatter = np.zeros((d, d))
    for row in x:
        diff = row - mean
        scatter += np.outer(diff, diff)
    return sym_eigen(scatter).vectors[:, :r]
