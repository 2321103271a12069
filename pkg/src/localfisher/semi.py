"""Semi-supervised local Fisher analysis for partially labeled data.

Local scatters are built from the labeled rows only; the total scatter of
all rows (the PCA scatter) is blended in with weight beta:

    S_rlw = (1 - beta) * S_lw + beta * I
    S_rlb = (1 - beta) * S_lb + beta * S_t

beta = 0 reproduces the supervised fit exactly, beta = 1 reduces the
eigenproblem to S_t phi = lambda phi, i.e. PCA, independent of the labels.
The identity in the within-blend is deliberately unscaled so that the
beta = 1 endpoint is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .affinity import local_scaling_affinity
from .errors import BadBeta, BadRank, TooFewLabeledPerClass
from .labels import LabelEncoding, encode_labels
from .lfda import (
    EmbeddingModel,
    apply_metric,
    build_weights,
    scatter_from_weights,
)
from .matcore import gen_sym_eigen, symmetrize
from .validate import as_data_matrix


@dataclass(frozen=True)
class SelfConfig:
    """Knobs for the semi-supervised fit.

    beta is the degree of unsupervision in [0, 1]; knn the neighbor count
    for the labeled-rows affinity; min_obs_per_label the smallest class
    size accepted.
    """

    r: int
    beta: float = 0.1
    knn: int = 5
    min_obs_per_label: int = 5
    metric: str = "plain"


def total_scatter(x) -> np.ndarray:
    """Total scatter sum_i (x_i - mu)(x_i - mu)^T over all rows."""
    x = as_data_matrix(x)
    centered = x - x.mean(axis=0)
    return symmetrize(centered.T @ centered)


def fit_self(x, y, cfg: SelfConfig) -> EmbeddingModel:
    """Fit the semi-supervised transform on possibly partially labeled data.

    Missing labels (``None`` or NaN) keep their rows in the total scatter
    and the returned embedding but are excluded from the local scatters.
    """
    x = as_data_matrix(x)
    enc = encode_labels(y)
    n, d = x.shape
    if enc.n != n:
        raise ValueError(f"X has {n} rows but y has {enc.n} labels")
    beta = float(cfg.beta)
    if not np.isfinite(beta) or not 0.0 <= beta <= 1.0:
        raise BadBeta(f"beta={cfg.beta!r} outside [0, 1]")
    if not 1 <= cfg.r <= d:
        raise BadRank(f"r={cfg.r} outside 1..{d}")
    if cfg.min_obs_per_label < 1:
        raise ValueError("min_obs_per_label must be >= 1")
    for cls, count in zip(enc.classes, enc.counts):
        if count < cfg.min_obs_per_label:
            raise TooFewLabeledPerClass(
                f"class {cls!r} has {int(count)} labeled samples, "
                f"need at least {cfg.min_obs_per_label}"
            )

    labeled = enc.indices >= 0
    if int(labeled.sum()) >= 2:
        x_lab = x[labeled]
        # Dropping unlabeled rows preserves the first-appearance numbering,
        # since classes are only ever introduced at labeled positions.
        enc_lab = LabelEncoding(
            classes=enc.classes,
            indices=enc.indices[labeled],
            counts=enc.counts,
        )
        a = local_scaling_affinity(x_lab, cfg.knn)
        weights = build_weights(a, enc_lab)
        s_lw = scatter_from_weights(x_lab, weights.within)
        s_lb = scatter_from_weights(x_lab, weights.between)
    else:
        # No labeled pairs exist, so the local scatters are empty sums.
        s_lw = np.zeros((d, d))
        s_lb = np.zeros((d, d))

    s_total = total_scatter(x)
    s_rlw = (1.0 - beta) * s_lw + beta * np.eye(d)
    s_rlb = (1.0 - beta) * s_lb + beta * s_total
    solution = gen_sym_eigen(s_rlb, s_rlw, cfg.r)
    t = apply_metric(solution, cfg.metric)
    return EmbeddingModel(
        kind="self",
        transform=t,
        embedded=x @ t,
        eigenvalues=solution.values,
        metric=cfg.metric,
        r=cfg.r,
        fit_params={
            "beta": beta,
            "knn": cfg.knn,
            "min_obs_per_label": cfg.min_obs_per_label,
        },
    )


def discard_labels(y, fraction: float, seed: int) -> list:
    """Return a copy of ``y`` with round(fraction * n) labels set missing.

    The discarded positions come from a seeded pseudo-random permutation,
    so the result is reproducible.
    """
    fraction = float(fraction)
    if not 0.0 <= fraction <= 1.0:
        raise ValueError(f"fraction={fraction!r} outside [0, 1]")
    out = list(y)
    n = len(out)
    n_discard = int(round(fraction * n))
    rng = np.random.default_rng(seed)
    for i in rng.permutation(n)[:n_discard]:
        out[i] = None
    return out
