"""Local Fisher discriminant analysis.

The fit maximizes between-class scatter against within-class scatter, with
both scatters weighted pairwise by a local-scaling affinity so that only
nearby same-class pairs are pulled together.  Far-apart samples of one class
(separate modes) are left alone, which is what distinguishes this method
from plain Fisher analysis.

Pipeline: affinity -> pairwise weight matrices -> scatter matrices in
Laplacian form -> generalized eigensolve -> metric post-processing ->
embedding Z = X T.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .affinity import local_scaling_affinity
from .errors import BadRank, DimMismatch
from .labels import LabelEncoding, encode_labels
from .matcore import EigenSolution, gen_sym_eigen, symmetrize
from .validate import as_data_matrix

METRICS = ("plain", "weighted", "orthonormalized")

DEFAULT_KNN = 7


@dataclass(frozen=True)
class WeightMatrices:
    """Pairwise weights for the within- and between-class scatters.

    For samples i, j in the same class of size n_c (out of n labeled
    samples total):

    * within[i, j]  = A[i, j] / n_c
    * between[i, j] = A[i, j] * (1/n - 1/n_c)

    and for samples in different classes within = 0, between = 1/n.
    """

    within: np.ndarray
    between: np.ndarray


@dataclass(frozen=True)
class EmbeddingModel:
    """A fitted dimensionality-reduction transform.

    ``transform`` is (d, r) for the linear kinds and (n, r) of kernel
    coefficients for ``kind == "klfda"``.  ``embedded`` holds the training
    embedding Z; models restored from disk carry ``embedded=None``.  Kernel
    models additionally keep the training data and bandwidth when
    out-of-sample transformation is wanted.
    """

    kind: str
    transform: np.ndarray
    embedded: np.ndarray | None
    eigenvalues: np.ndarray
    metric: str
    r: int
    fit_params: dict = field(default_factory=dict)
    training_data: np.ndarray | None = None
    sigma: float | None = None


def build_weights(a, y) -> WeightMatrices:
    """Pairwise scatter weights from an affinity matrix and full labels."""
    a = np.asarray(a, dtype=np.float64)
    enc = encode_labels(y).require_full()
    n = enc.n
    if a.shape != (n, n):
        raise ValueError(f"affinity is {a.shape} but there are {n} labels")
    idx = enc.indices
    same = idx[:, None] == idx[None, :]
    class_size = enc.counts[idx].astype(np.float64)
    within = np.where(same, a / class_size[:, None], 0.0)
    between = np.where(same, a * (1.0 / n - 1.0 / class_size[:, None]), 1.0 / n)
    return WeightMatrices(within=within, between=between)


def scatter_from_weights(x, w) -> np.ndarray:
    """Scatter matrix X^T (D_W - W) X for symmetric pairwise weights W.

    Algebraically equal to the pairwise form
    1/2 sum_ij W_ij (x_i - x_j)(x_i - x_j)^T but O(n d^2 + n^2 d);
    the brute-force twin lives in :mod:`localfisher.baselines`.
    """
    x = as_data_matrix(x)
    w = np.asarray(w, dtype=np.float64)
    n = x.shape[0]
    if w.shape != (n, n):
        raise ValueError(f"weights are {w.shape} but X has {n} rows")
    degree = w.sum(axis=1)
    scatter = x.T @ (degree[:, None] * x) - x.T @ (w @ x)
    return symmetrize(scatter)


def apply_metric(solution: EigenSolution, metric: str) -> np.ndarray:
    """Post-process eigenvector columns into the requested transform.

    plain keeps the solver's columns, weighted scales column i by
    sqrt(max(lambda_i, 0)), orthonormalized re-orthonormalizes the plain
    columns in eigenvalue order (QR) and restores the sign convention.
    """
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}, got {metric!r}")
    t = solution.vectors
    if metric == "plain":
        return t.copy()
    if metric == "weighted":
        return t * np.sqrt(np.maximum(solution.values, 0.0))
    q, _ = np.linalg.qr(t)
    anchor = np.argmax(np.abs(q), axis=0)
    signs = np.where(q[anchor, np.arange(q.shape[1])] < 0.0, -1.0, 1.0)
    return q * signs


def fit_lfda(x, y, r: int, metric: str = "plain", k: int = DEFAULT_KNN) -> EmbeddingModel:
    """Fit the local Fisher transform.

    Parameters
    ----------
    x : (n, d) array-like
        Feature matrix, one row per sample.
    y : sequence of length n
        Class labels; missing labels are not allowed here (use
        :func:`localfisher.semi.fit_self` for partially labeled data).
    r : int
        Target dimension, 1 <= r <= d.
    metric : {"plain", "weighted", "orthonormalized"}
        Transform post-processing.
    k : int
        Neighbor count for the local-scaling affinity.
    """
    x = as_data_matrix(x)
    enc = encode_labels(y).require_full()
    n, d = x.shape
    if enc.n != n:
        raise ValueError(f"X has {n} rows but y has {enc.n} labels")
    if not 1 <= r <= d:
        raise BadRank(f"r={r} outside 1..{d}")
    _warn_singleton_classes(enc)

    a = local_scaling_affinity(x, k)
    weights = build_weights(a, enc)
    s_within = scatter_from_weights(x, weights.within)
    s_between = scatter_from_weights(x, weights.between)
    solution = gen_sym_eigen(s_between, s_within, r)
    t = apply_metric(solution, metric)
    return EmbeddingModel(
        kind="lfda",
        transform=t,
        embedded=x @ t,
        eigenvalues=solution.values,
        metric=metric,
        r=r,
        fit_params={"knn": k},
    )


def transform(model: EmbeddingModel, x_new) -> np.ndarray:
    """Embed new rows with a fitted model.

    Linear kinds compute X_new T; kernel models are dispatched to
    :func:`localfisher.kernel.transform_klfda`.
    """
    if model.kind == "klfda":
        from .kernel import transform_klfda

        return transform_klfda(model, x_new)
    x_new = as_data_matrix(x_new, "X_new")
    d = model.transform.shape[0]
    if x_new.shape[1] != d:
        raise DimMismatch(
            f"model was fit on {d} features but new data has {x_new.shape[1]}"
        )
    return x_new @ model.transform


def _warn_singleton_classes(enc: LabelEncoding) -> None:
    for cls, count in zip(enc.classes, enc.counts):
        if count == 1:
            warnings.warn(
                f"class {cls!r} has a single sample; it cannot contribute "
                "within-class structure",
                stacklevel=3,
            )
