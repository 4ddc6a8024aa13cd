"""Knot grids, boundary conditions and assembly of the moment systems.

Fitting reduces to a tridiagonal linear solve for the moments (the values
of the tension operator at the knots).  Two systems are assembled here:

* clamped: n equations for all n moments; the first and last rows encode
  the prescribed end slopes, the interior rows the slope-continuity
  conditions.  Rows are normalized so the diagonal is positive, which makes
  the matrix symmetric with entries (sigma, rho+rho, sigma).
* natural: the end moments vanish by definition, leaving an (n-2)-row
  symmetric system for the interior moments.

Every assembled row is strictly diagonally dominant for any grid and any
nonnegative tension (sigma < rho/2 pointwise), which is what licenses the
pivot-free O(n) solve in :mod:`.solver`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernel
from .errors import DimensionMismatch, DomainError, NonFiniteInput
from .kernel import _tension_value

__all__ = [
    "KnotGrid",
    "Clamped",
    "Natural",
    "NATURAL",
    "TridiagonalSystem",
    "assemble_clamped",
    "assemble_natural",
]


class KnotGrid:
    """Strictly increasing knot sequence with cached segment widths."""

    __slots__ = ("knots", "widths")

    def __init__(self, knots):
        arr = np.array(knots, dtype=np.float64, copy=True).reshape(-1)
        if arr.size < 2:
            raise DomainError(f"need at least 2 knots, got {arr.size}")
        if not np.isfinite(arr).all():
            raise NonFiniteInput("knots must be finite")
        widths = np.diff(arr)
        if not (widths > 0.0).all():
            bad = int(np.argmin(widths > 0.0)) + 1
            raise DomainError(f"knots must be strictly increasing (violated at index {bad})")
        arr.setflags(write=False)
        widths.setflags(write=False)
        self.knots = arr
        self.widths = widths

    @property
    def n(self):
        return self.knots.size

    @property
    def t_start(self):
        return float(self.knots[0])

    @property
    def t_end(self):
        return float(self.knots[-1])

    def segment_index(self, t):
        """Index of the segment covering t (ties go to the right segment,
        the last knot to the last segment; outside points clamp)."""
        idx = np.searchsorted(self.knots, t, side="right") - 1
        return np.clip(idx, 0, self.n - 2)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"KnotGrid(n={self.n}, span=[{self.t_start:g}, {self.t_end:g}])"


@dataclass(frozen=True)
class Clamped:
    """Prescribed first derivatives at both ends."""

    d_left: float
    d_right: float

    def __post_init__(self):
        dl, dr = float(self.d_left), float(self.d_right)
        if not (np.isfinite(dl) and np.isfinite(dr)):
            raise NonFiniteInput("clamped end derivatives must be finite")
        object.__setattr__(self, "d_left", dl)
        object.__setattr__(self, "d_right", dr)


@dataclass(frozen=True)
class Natural:
    """The tension operator vanishes at both ends."""


NATURAL = Natural()


@dataclass(frozen=True, eq=False)
class TridiagonalSystem:
    """Three diagonals plus right-hand side, sized m x m."""

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        # own private copies: the system is immutable and safe to share
        sub = np.array(self.sub, dtype=np.float64, copy=True).reshape(-1)
        diag = np.array(self.diag, dtype=np.float64, copy=True).reshape(-1)
        sup = np.array(self.sup, dtype=np.float64, copy=True).reshape(-1)
        rhs = np.array(self.rhs, dtype=np.float64, copy=True).reshape(-1)
        m = diag.size
        off = max(m - 1, 0)
        if sub.size != off or sup.size != off or rhs.size != m:
            raise DimensionMismatch(
                f"diag has {m} rows; expected {off} sub/sup entries and {m} rhs entries, "
                f"got {sub.size}/{sup.size}/{rhs.size}"
            )
        for name, a in (("sub", sub), ("diag", diag), ("sup", sup), ("rhs", rhs)):
            if not np.isfinite(a).all():
                raise NonFiniteInput(f"{name} contains non-finite entries")
        for a in (sub, diag, sup, rhs):
            a.setflags(write=False)
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "sup", sup)
        object.__setattr__(self, "rhs", rhs)

    @property
    def m(self):
        return self.diag.size

    def dominance_margins(self):
        """|diag| - |sub| - |sup| per row; all positive for assembled systems."""
        margins = np.abs(self.diag)
        if self.m > 1:
            margins[1:] -= np.abs(self.sub)
            margins[:-1] -= np.abs(self.sup)
        return margins

    def is_diagonally_dominant(self):
        return self.m == 0 or bool((self.dominance_margins() > 0.0).all())

    def matvec(self, x):
        """Multiply the tridiagonal matrix by x (for residual checks)."""
        x = np.asarray(x, dtype=np.float64)
        if x.size != self.m:
            raise DimensionMismatch(f"x has {x.size} entries, expected {self.m}")
        out = self.diag * x
        if self.m > 1:
            out[:-1] += self.sup * x[1:]
            out[1:] += self.sub * x[:-1]
        return out


def _validated_values(grid, g):
    g = np.asarray(g, dtype=np.float64).reshape(-1)
    if g.size != grid.n:
        raise DimensionMismatch(f"got {g.size} data values for {grid.n} knots")
    if not np.isfinite(g).all():
        raise NonFiniteInput("data values must be finite")
    return g


def assemble_clamped(grid, xi, g, bc):
    """n x n system for all moments under prescribed end slopes.

    Rows are normalized to a positive diagonal, giving the symmetric layout
    sub = sup = sigma(h_j), diag = (rho(h_0), rho+rho, ..., rho(h_last)).
    """
    if not isinstance(grid, KnotGrid):
        grid = KnotGrid(grid)
    if not isinstance(bc, Clamped):
        raise TypeError(f"bc must be Clamped, got {type(bc).__name__}")
    xv = _tension_value(xi)
    g = _validated_values(grid, g)
    h = grid.widths
    n = grid.n

    r, s = kernel._rho_sigma_arrays(xv, h)
    ct, cs = kernel._xi_coth_csch_arrays(xv, h)

    diag = np.empty(n)
    diag[0] = r[0]
    diag[-1] = r[-1]
    diag[1:-1] = r[:-1] + r[1:]

    rhs = np.empty(n)
    rhs[0] = cs[0] * g[1] - ct[0] * g[0] - bc.d_left
    rhs[-1] = cs[-1] * g[-2] - ct[-1] * g[-1] + bc.d_right
    if n > 2:
        rhs[1:-1] = cs[:-1] * g[:-2] - (ct[:-1] + ct[1:]) * g[1:-1] + cs[1:] * g[2:]

    return TridiagonalSystem(sub=s, diag=diag, sup=s, rhs=rhs)


def assemble_natural(grid, xi, g):
    """(n-2) x (n-2) symmetric system for the interior moments."""
    if not isinstance(grid, KnotGrid):
        grid = KnotGrid(grid)
    xv = _tension_value(xi)
    g = _validated_values(grid, g)
    h = grid.widths
    n = grid.n

    if n == 2:
        empty = np.empty(0)
        return TridiagonalSystem(sub=empty, diag=empty, sup=empty, rhs=empty)

    r, s = kernel._rho_sigma_arrays(xv, h)
    ct, cs = kernel._xi_coth_csch_arrays(xv, h)

    diag = r[:-1] + r[1:]
    off = s[1:-1]
    rhs = cs[:-1] * g[:-2] - (ct[:-1] + ct[1:]) * g[1:-1] + cs[1:] * g[2:]
    return TridiagonalSystem(sub=off, diag=diag, sup=off, rhs=rhs)
