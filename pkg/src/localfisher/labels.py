"""Class-label encoding with optional missing labels.

Classes are numbered by first appearance so that any bijective renaming of
the label values leaves every downstream computation untouched.  A label is
missing when it is ``None`` or a float NaN; missing labels encode as -1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MissingLabel


def is_missing(value) -> bool:
    if value is None:
        return True
    if isinstance(value, float) and np.isnan(value):
        return True
    return isinstance(value, np.floating) and np.isnan(value)


@dataclass(frozen=True)
class LabelEncoding:
    """Labels mapped to dense class indices in first-appearance order.

    ``indices[i]`` is the class index of sample i, or -1 when the label is
    missing; ``counts[c]`` is the number of samples in class c.
    """

    classes: tuple
    indices: np.ndarray
    counts: np.ndarray

    @property
    def n(self) -> int:
        return int(self.indices.shape[0])

    @property
    def n_labeled(self) -> int:
        return int(np.sum(self.indices >= 0))

    def require_full(self) -> "LabelEncoding":
        if self.n_labeled != self.n:
            raise MissingLabel(
                f"{self.n - self.n_labeled} of {self.n} labels are missing"
            )
        return self


def encode_labels(y) -> LabelEncoding:
    """Encode a label sequence; accepts an existing encoding unchanged."""
    if isinstance(y, LabelEncoding):
        return y
    values = list(np.asarray(y, dtype=object)) if isinstance(y, np.ndarray) else list(y)
    seen: dict = {}
    classes: list = []
    indices = np.empty(len(values), dtype=np.int64)
    for i, value in enumerate(values):
        if is_missing(value):
            indices[i] = -1
            continue
        idx = seen.get(value)
        if idx is None:
            idx = len(classes)
            seen[value] = idx
            classes.append(value)
        indices[i] = idx
    counts = np.bincount(indices[indices >= 0], minlength=len(classes)).astype(np.int64)
    return LabelEncoding(classes=tuple(classes), indices=indices, counts=counts)
