"""Gaussian kernel matrices and kernel local Fisher discriminant analysis.

The kernel variant runs the same scatter machinery in sample space: squared
distances are induced from the kernel (d2_ij = K_ii + K_jj - 2 K_ij), the
scatters become K (D_W - W) K, and the solved coefficients alpha embed the
training data as Z = K alpha.  Out-of-sample rows need the training data and
bandwidth to build their kernel rows, so models fit from a bare kernel
matrix cannot transform new data.
"""

from __future__ import annotations

import math

import numpy as np

from .affinity import cross_sqdist, local_scaling_affinity_from_sqdist, pairwise_sqdist
from .errors import BadRank, BadSigma, DimMismatch, KernelModelNotTransformable
from .labels import encode_labels
from .lfda import EmbeddingModel, apply_metric, build_weights, scatter_from_weights
from .matcore import gen_sym_eigen, symmetrize
from .validate import as_data_matrix

DEFAULT_SIGMA = 1.0


def _check_sigma(sigma) -> float:
    try:
        sigma = float(sigma)
    except (TypeError, ValueError):
        raise BadSigma(f"sigma must be a positive number, got {sigma!r}") from None
    if not math.isfinite(sigma) or sigma <= 0.0:
        raise BadSigma(f"sigma must be positive and finite, got {sigma!r}")
    return sigma


def gauss_kernel_matrix(x, sigma: float = DEFAULT_SIGMA) -> np.ndarray:
    """Gaussian kernel matrix K[i, j] = exp(-||x_i - x_j||^2 / (2 sigma^2))."""
    sigma = _check_sigma(sigma)
    d2 = pairwise_sqdist(x)
    return np.exp(-d2 / (2.0 * sigma * sigma))


def median_pairwise_distance(x) -> float:
    """Median Euclidean distance over distinct sample pairs (the "auto"
    bandwidth heuristic)."""
    x = as_data_matrix(x)
    n = x.shape[0]
    if n < 2:
        raise BadSigma("cannot infer a bandwidth from fewer than 2 samples")
    d2 = pairwise_sqdist(x)
    iu = np.triu_indices(n, k=1)
    return float(np.median(np.sqrt(d2[iu])))


def kernel_sqdist(k) -> np.ndarray:
    """Squared distances induced by a kernel matrix: K_ii + K_jj - 2 K_ij."""
    k = symmetrize(k)
    diag = np.diag(k).copy()
    d2 = diag[:, None] + diag[None, :] - (k + k.T)
    np.maximum(d2, 0.0, out=d2)
    np.fill_diagonal(d2, 0.0)
    return d2


def fit_klfda(
    kmatrix,
    y,
    r: int,
    metric: str = "plain",
    k: int = 7,
    training_data=None,
    sigma: float | None = None,
) -> EmbeddingModel:
    """Fit kernel local Fisher analysis from a precomputed kernel matrix.

    Parameters
    ----------
    kmatrix : (n, n) array-like
        Symmetric positive-semidefinite kernel matrix.
    y : sequence of length n
        Class labels, none missing.
    r : int
        Target dimension, 1 <= r <= n.
    metric : {"plain", "weighted", "orthonormalized"}
    k : int
        Neighbor count for the local-scaling affinity, computed from
        kernel-induced distances.
    training_data, sigma : optional
        Pass both to make the model able to embed new rows; without them
        :func:`transform_klfda` raises ``KernelModelNotTransformable``.

    The within-scatter in kernel space is rank-deficient by construction,
    so the generalized solve routinely engages its ridge.
    """
    kmat = symmetrize(kmatrix)
    enc = encode_labels(y).require_full()
    n = kmat.shape[0]
    if enc.n != n:
        raise ValueError(f"kernel is {kmat.shape} but there are {enc.n} labels")
    if not 1 <= r <= n:
        raise BadRank(f"r={r} outside 1..{n}")
    if training_data is not None:
        training_data = as_data_matrix(training_data, "training_data")
        if training_data.shape[0] != n:
            raise ValueError(
                f"training data has {training_data.shape[0]} rows, kernel has {n}"
            )
        sigma = _check_sigma(DEFAULT_SIGMA if sigma is None else sigma)
    elif sigma is not None:
        sigma = _check_sigma(sigma)

    d2 = kernel_sqdist(kmat)
    a = local_scaling_affinity_from_sqdist(d2, k)
    weights = build_weights(a, enc)
    s_within = scatter_from_weights(kmat, weights.within)
    s_between = scatter_from_weights(kmat, weights.between)
    solution = gen_sym_eigen(s_between, s_within, r)
    alpha = apply_metric(solution, metric)
    return EmbeddingModel(
        kind="klfda",
        transform=alpha,
        embedded=kmat @ alpha,
        eigenvalues=solution.values,
        metric=metric,
        r=r,
        fit_params={"knn": k, "sigma": sigma},
        training_data=training_data,
        sigma=sigma,
    )


def transform_klfda(model: EmbeddingModel, x_new) -> np.ndarray:
    """Embed new rows through a kernel model: Z_new = K_new alpha."""
    if model.training_data is None or model.sigma is None:
        raise KernelModelNotTransformable(
            "model was fit without stored training data; refit with "
            "training_data= and sigma= to enable out-of-sample transforms"
        )
    x_new = as_data_matrix(x_new, "X_new")
    d = model.training_data.shape[1]
    if x_new.shape[1] != d:
        raise DimMismatch(
            f"model was fit on {d} features but new data has {x_new.shape[1]}"
        )
    d2 = cross_sqdist(x_new, model.training_data)
    k_new = np.exp(-d2 / (2.0 * model.sigma * model.sigma))
    return k_new @ model.transform
