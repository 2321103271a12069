"""Self-contained SVG scatter plots with deterministic byte output.

Everything in the emitted file is a pure function of the inputs: fixed
canvas, fixed palette, fixed number formatting.  Classes are colored in
first-appearance order; rows with a missing label get a neutral gray and
their own legend entry.
"""

from __future__ import annotations

import numpy as np

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
)
UNLABELED_COLOR = "#bbbbbb"
UNLABELED_NAME = "(unlabeled)"

WIDTH = 640
HEIGHT = 480
MARGIN_LEFT = 64
MARGIN_RIGHT = 168
MARGIN_TOP = 24
MARGIN_BOTTOM = 56
N_TICKS = 5
POINT_RADIUS = 3.0


def _coord(value: float) -> str:
    return format(value, ".2f")


def _tick(value: float) -> str:
    return format(value, ".4g")


def _axis_range(values: np.ndarray):
    lo = float(values.min())
    hi = float(values.max())
    span = hi - lo
    pad = 0.05 * span if span > 0.0 else max(1.0, abs(lo) * 0.05)
    return lo - pad, hi + pad


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def render_scatter_svg(xs, ys, labels=None, xlabel="Z1", ylabel="Z2") -> str:
    """Render a labeled 2-D scatter as an SVG document string."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValueError("xs and ys must be 1-D arrays of equal length")
    n = xs.shape[0]
    if labels is not None and len(labels) != n:
        raise ValueError(f"{len(labels)} labels for {n} points")

    classes = []
    if labels is not None:
        seen = set()
        for lab in labels:
            if lab is None or lab in seen:
                continue
            seen.add(lab)
            classes.append(lab)

    def color_of(lab):
        if labels is None:
            return PALETTE[0]
        if lab is None:
            return UNLABELED_COLOR
        return PALETTE[classes.index(lab) % len(PALETTE)]

    x_lo, x_hi = _axis_range(xs)
    y_lo, y_hi = _axis_range(ys)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(value: float) -> float:
        return MARGIN_LEFT + (value - x_lo) / (x_hi - x_lo) * plot_w

    def py(value: float) -> float:
        return MARGIN_TOP + (y_hi - value) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        '<g font-family="sans-serif" font-size="12" fill="#000000">',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" '
        f'height="{plot_h}" fill="none" stroke="#000000"/>',
    ]

    bottom = MARGIN_TOP + plot_h
    for i in range(N_TICKS):
        frac = i / (N_TICKS - 1)
        xv = x_lo + frac * (x_hi - x_lo)
        xp = _coord(px(xv))
        out.append(
            f'<line x1="{xp}" y1="{bottom}" x2="{xp}" y2="{bottom + 5}" '
            'stroke="#000000"/>'
        )
        out.append(
            f'<text x="{xp}" y="{bottom + 18}" text-anchor="middle">{_tick(xv)}</text>'
        )
        yv = y_lo + frac * (y_hi - y_lo)
        yp = _coord(py(yv))
        out.append(
            f'<line x1="{MARGIN_LEFT - 5}" y1="{yp}" x2="{MARGIN_LEFT}" y2="{yp}" '
            'stroke="#000000"/>'
        )
        out.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{yp}" text-anchor="end" '
            f'dominant-baseline="middle">{_tick(yv)}</text>'
        )

    out.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 16}" '
        f'text-anchor="middle">{_escape(xlabel)}</text>'
    )
    out.append(
        f'<text x="18" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {MARGIN_TOP + plot_h / 2:.1f})">'
        f"{_escape(ylabel)}</text>"
    )

    for i in range(n):
        lab = labels[i] if labels is not None else None
        out.append(
            f'<circle cx="{_coord(px(xs[i]))}" cy="{_coord(py(ys[i]))}" '
            f'r="{POINT_RADIUS:g}" fill="{color_of(lab)}" fill-opacity="0.8"/>'
        )

    legend_entries = [(str(c), color_of(c)) for c in classes]
    if labels is not None and any(lab is None for lab in labels):
        legend_entries.append((UNLABELED_NAME, UNLABELED_COLOR))
    lx = WIDTH - MARGIN_RIGHT + 16
    for row, (name, color) in enumerate(legend_entries):
        ly = MARGIN_TOP + 8 + 20 * row
        out.append(
            f'<rect x="{lx}" y="{ly}" width="12" height="12" fill="{color}" '
            'class="legend"/>'
        )
        out.append(
            f'<text x="{lx + 18}" y="{ly + 10}">{_escape(name)}</text>'
        )

    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
