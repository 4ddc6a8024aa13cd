"""Matplotlib figure rendering for the report path.

Uses the object-oriented Figure API (no pyplot, no global backend state),
so importing this module never touches an interactive backend.  Timestamp
metadata is stripped from the written files to keep repeated runs
byte-identical.
"""

from __future__ import annotations

import pathlib

__all__ = ["save_curve_plot"]


def _savefig_metadata(path):
    suffix = pathlib.Path(path).suffix.lower()
    if suffix == ".png":
        return {"Software": "lsplines"}
    if suffix == ".pdf":
        return {"CreationDate": None}
    if suffix == ".svg":
        return {"Date": None}
    return None


def save_curve_plot(path, curves, knots=None, title=None, xlabel="t", ylabel="value"):
    """Write a figure with one line per (x, y, label) entry in ``curves``
    and optional knot markers."""
    from matplotlib.figure import Figure

    fig = Figure(figsize=(8.0, 5.0), dpi=100)
    ax = fig.subplots()
    for x, y, label in curves:
        ax.plot(x, y, label=label, linewidth=1.5)
    if knots is not None:
        ax.plot(knots[0], knots[1], "ko", markersize=5, label="knots")
    ax.grid(True, alpha=0.3)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, metadata=_savefig_metadata(path))
