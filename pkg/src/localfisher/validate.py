"""Shared input checks for data matrices."""

from __future__ import annotations

import numpy as np

from .errors import NonFiniteInput


def as_data_matrix(x, name: str = "X") -> np.ndarray:
    """Coerce to a finite float64 matrix of shape (n, d), n >= 1, d >= 1.

    A 1-D input is treated as a single feature column.
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got ndim={arr.ndim}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{name} must be non-empty, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        bad = np.argwhere(~np.isfinite(arr))[0]
        raise NonFiniteInput(
            f"{name} contains a non-finite value at row {bad[0]}, column {bad[1]}"
        )
    return arr
