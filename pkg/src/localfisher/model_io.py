"""JSON persistence for fitted models.

The file layout is flat and human-inspectable: format_version, the model
fields, the transform and eigenvalues as nested row-major arrays, feature
and class names, and an optional training block for kernel models.  Floats
are written with Python's shortest round-trip decimal representation, so
loading reproduces every matrix bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import ModelFormatError
from .lfda import METRICS, EmbeddingModel

FORMAT_VERSION = 1

_KINDS = ("lfda", "klfda", "self")


@dataclass(frozen=True)
class ModelBundle:
    """A fitted model plus the column metadata needed by the CLI."""

    model: EmbeddingModel
    feature_names: list
    label_classes: list
    label_col: str | None = None


def save_model(path, bundle: ModelBundle) -> None:
    model = bundle.model
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": model.kind,
        "metric": model.metric,
        "r": model.r,
        "fit_params": model.fit_params,
        "eigenvalues": [float(v) for v in model.eigenvalues],
        "transform": [[float(v) for v in row] for row in model.transform],
        "feature_names": list(bundle.feature_names),
        "label_classes": [str(c) for c in bundle.label_classes],
        "label_col": bundle.label_col,
    }
    if model.kind == "klfda" and model.training_data is not None:
        doc["training"] = {
            "sigma": float(model.sigma),
            "data": [[float(v) for v in row] for row in model.training_data],
        }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, indent=1)
        handle.write("\n")


def load_model(path) -> ModelBundle:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ModelFormatError(f"{path}: not a valid model file: {exc}") from None
    if not isinstance(doc, dict):
        raise ModelFormatError(f"{path}: not a valid model file: expected an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ModelFormatError(
            f"{path}: unsupported format_version {version!r}, expected {FORMAT_VERSION}"
        )
    try:
        kind = doc["kind"]
        metric = doc["metric"]
        r = int(doc["r"])
        transform = np.asarray(doc["transform"], dtype=np.float64)
        eigenvalues = np.asarray(doc["eigenvalues"], dtype=np.float64)
        fit_params = dict(doc.get("fit_params") or {})
        feature_names = list(doc["feature_names"])
        label_classes = list(doc.get("label_classes") or [])
        label_col = doc.get("label_col")
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"{path}: malformed model file: {exc}") from None
    if kind not in _KINDS:
        raise ModelFormatError(f"{path}: unknown model kind {kind!r}")
    if metric not in METRICS:
        raise ModelFormatError(f"{path}: unknown metric {metric!r}")
    if transform.ndim != 2 or eigenvalues.ndim != 1:
        raise ModelFormatError(f"{path}: transform/eigenvalue shapes are malformed")

    training_data = None
    sigma = None
    block = doc.get("training")
    if block is not None:
        try:
            sigma = float(block["sigma"])
            training_data = np.asarray(block["data"], dtype=np.float64)
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelFormatError(f"{path}: malformed training block: {exc}") from None

    model = EmbeddingModel(
        kind=kind,
        transform=transform,
        embedded=None,
        eigenvalues=eigenvalues,
        metric=metric,
        r=r,
        fit_params=fit_params,
        training_data=training_data,
        sigma=sigma,
    )
    return ModelBundle(
        model=model,
        feature_names=feature_names,
        label_classes=label_classes,
        label_col=label_col,
    )
