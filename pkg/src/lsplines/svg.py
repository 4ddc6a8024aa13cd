"""Self-contained SVG line charts (no plotting dependency).

Fixed 800x500 viewport, linear axis mapping with 5% margins, curves as
polylines of the sampled points, knots as circles.  Output is a plain
string built deterministically, so identical inputs give identical bytes.
"""

from __future__ import annotations

import numpy as np

__all__ = ["line_chart", "write_chart"]

WIDTH = 800
HEIGHT = 500
MARGIN_FRAC = 0.05

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e")


def _bounds(series, markers):
    xs = [np.asarray(x, dtype=float) for x, _ in series]
    ys = [np.asarray(y, dtype=float) for _, y in series]
    if markers is not None:
        xs.append(np.asarray(markers[0], dtype=float))
        ys.append(np.asarray(markers[1], dtype=float))
    x_all = np.concatenate(xs)
    y_all = np.concatenate(ys)
    x_lo, x_hi = float(x_all.min()), float(x_all.max())
    y_lo, y_hi = float(y_all.min()), float(y_all.max())
    if x_hi <= x_lo:
        x_lo, x_hi = x_lo - 0.5, x_lo + 0.5
    if y_hi <= y_lo:
        y_lo, y_hi = y_lo - 0.5, y_lo + 0.5
    return x_lo, x_hi, y_lo, y_hi


def line_chart(series, markers=None, labels=None):
    """Render curves and optional point markers as an SVG document string.

    ``series`` is a sequence of (x, y) array pairs drawn as polylines;
    ``markers`` an optional (x, y) pair drawn as circles.
    """
    x_lo, x_hi, y_lo, y_hi = _bounds(series, markers)
    pad_x = MARGIN_FRAC * WIDTH
    pad_y = MARGIN_FRAC * HEIGHT
    span_x = WIDTH - 2.0 * pad_x
    span_y = HEIGHT - 2.0 * pad_y

    def to_px(x, y):
        px = pad_x + (np.asarray(x, dtype=float) - x_lo) / (x_hi - x_lo) * span_x
        py = HEIGHT - pad_y - (np.asarray(y, dtype=float) - y_lo) / (y_hi - y_lo) * span_y
        return px, py

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{pad_x:.2f}" y="{pad_y:.2f}" width="{span_x:.2f}" height="{span_y:.2f}" '
        f'fill="none" stroke="#cccccc" stroke-width="1"/>',
    ]
    for i, (x, y) in enumerate(series):
        px, py = to_px(x, y)
        points = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))
        color = _PALETTE[i % len(_PALETTE)]
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )
    if markers is not None:
        mx, my = to_px(markers[0], markers[1])
        for a, b in zip(np.atleast_1d(mx), np.atleast_1d(my)):
            parts.append(f'<circle cx="{a:.2f}" cy="{b:.2f}" r="4" fill="black"/>')
    if labels:
        for i, text in enumerate(labels):
            color = _PALETTE[i % len(_PALETTE)]
            y_text = pad_y + 16.0 * (i + 1)
            parts.append(
                f'<text x="{pad_x + 8:.2f}" y="{y_text:.2f}" fill="{color}" '
                f'font-family="sans-serif" font-size="12">{text}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_chart(path, series, markers=None, labels=None):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(line_chart(series, markers=markers, labels=labels))
