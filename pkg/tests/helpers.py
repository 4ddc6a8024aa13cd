"""Shared generators for the test suite."""

import numpy as np

from lsplines import KnotGrid, TridiagonalSystem


def log_uniform(rng, lo, hi, size=None):
    return 10.0 ** rng.uniform(np.log10(lo), np.log10(hi), size)


def random_grid(rng, n, t0=0.0, span=1.0):
    """Strictly increasing grid of n knots starting at t0."""
    widths = rng.uniform(0.2, 1.0, n - 1)
    widths *= span / widths.sum()
    return KnotGrid(t0 + np.concatenate([[0.0], np.cumsum(widths)]))


def grid_with_products(rng, n, x_lo, x_hi, xi=1.0):
    """Grid whose segment widths realize log-uniform products xi*h_j."""
    x = log_uniform(rng, x_lo, x_hi, n - 1)
    knots = np.concatenate([[0.0], np.cumsum(x / xi)])
    return KnotGrid(knots), xi


def random_dominant_system(rng, m, margin_lo=0.05, margin_hi=2.0):
    """Random strictly row diagonally dominant system of size m."""
    sub = rng.uniform(-1.0, 1.0, max(m - 1, 0))
    sup = rng.uniform(-1.0, 1.0, max(m - 1, 0))
    margin = log_uniform(rng, margin_lo, margin_hi, m)
    diag = margin.copy()
    if m > 1:
        diag[1:] += np.abs(sub)
        diag[:-1] += np.abs(sup)
    sign = np.where(rng.uniform(size=m) < 0.5, -1.0, 1.0)
    rhs = rng.standard_normal(m)
    return TridiagonalSystem(sub=sub, diag=sign * diag, sup=sup, rhs=rhs)
