"""CSV ingestion and emission.

One dialect only: comma-separated, UTF-8, header row required, period
decimal separator.  Feature cells must parse as finite numbers; failures
name the file, row, and column.  An empty cell in the label column means
the label is missing.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import DatasetError


@dataclass(frozen=True)
class Dataset:
    feature_names: list
    x: np.ndarray
    labels: list | None = None
    label_col: str | None = None


def read_header(path) -> list:
    """Return the stripped header row of a CSV file."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as handle:
            first = next(csv.reader(handle), None)
    except OSError as exc:
        raise DatasetError(f"{path}: cannot read: {exc.strerror or exc}") from None
    if first is None or not any(cell.strip() for cell in first):
        raise DatasetError(f"{path}: missing header row")
    return [cell.strip() for cell in first]


def read_dataset(path, label_col=None, feature_cols=None) -> Dataset:
    """Load a CSV file into a feature matrix and an optional label column.

    ``label_col`` binds that column as labels and excludes it from the
    features.  ``feature_cols`` restricts and orders the feature columns
    (used when transforming through a saved model); every requested column
    must exist.
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise DatasetError(f"{path}: cannot read: {exc.strerror or exc}") from None
    if not rows or not any(cell.strip() for cell in rows[0]):
        raise DatasetError(f"{path}: missing header row")
    header = [cell.strip() for cell in rows[0]]
    seen = set()
    for name in header:
        if name in seen:
            raise DatasetError(f"{path}: duplicate column {name!r}")
        seen.add(name)
    col_of = {name: i for i, name in enumerate(header)}

    if label_col is not None and label_col not in col_of:
        raise DatasetError(f"{path}: label column {label_col!r} not found")
    if feature_cols is None:
        feature_cols = [name for name in header if name != label_col]
    else:
        for name in feature_cols:
            if name not in col_of:
                raise DatasetError(f"{path}: missing feature column {name!r}")
    if not feature_cols:
        raise DatasetError(f"{path}: no feature columns")

    data = rows[1:]
    if not data:
        raise DatasetError(f"{path}: no data rows")
    x = np.empty((len(data), len(feature_cols)))
    labels = [] if label_col is not None else None
    for rownum, row in enumerate(data, start=1):
        if len(row) != len(header):
            raise DatasetError(
                f"{path}: row {rownum} has {len(row)} cells, expected {len(header)}"
            )
        for j, name in enumerate(feature_cols):
            cell = row[col_of[name]].strip()
            try:
                value = float(cell)
            except ValueError:
                raise DatasetError(
                    f"{path}: row {rownum}, column {name!r}: not a number: {cell!r}"
                ) from None
            if not math.isfinite(value):
                raise DatasetError(
                    f"{path}: row {rownum}, column {name!r}: non-finite value {cell!r}"
                )
            x[rownum - 1, j] = value
        if labels is not None:
            cell = row[col_of[label_col]].strip()
            labels.append(cell if cell else None)
    return Dataset(feature_names=list(feature_cols), x=x, labels=labels, label_col=label_col)


def format_float(value: float) -> str:
    """Decimal rendering with 17 significant digits (round-trip exact)."""
    return format(float(value), ".17g")


def write_embedding_csv(path, z, labels=None, label_col=None) -> None:
    """Write embedded coordinates as columns Z1..Zr, optionally followed by
    a pass-through label column."""
    z = np.asarray(z, dtype=np.float64)
    header = [f"Z{j + 1}" for j in range(z.shape[1])]
    if label_col is not None:
        header.append(label_col)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for i in range(z.shape[0]):
            row = [format_float(v) for v in z[i]]
            if label_col is not None:
                value = labels[i] if labels is not None else None
                row.append("" if value is None else str(value))
            writer.writerow(row)
