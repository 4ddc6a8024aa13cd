"""Fitting and evaluating the order-four tension interpolant.

A fitted model stores the knot grid, the data values and the "moments":
the values of the second-order tension operator d^2/dt^2 - xi^2 at the
knots.  On each segment the interpolant is the four-term basis combination
from :mod:`.basis`, parameterized by the two endpoint values and the two
endpoint moments, so evaluation anywhere is O(log n) (binary segment
lookup) after the O(n) fit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import basis
from .errors import BadSpec, DimensionMismatch, InvalidOrder, NonFiniteInput
from .kernel import _tension_value
from .solver import solve_tridiagonal
from .system import NATURAL, Clamped, KnotGrid, Natural, assemble_clamped, assemble_natural

__all__ = ["LSpline", "SampleTable", "fit"]


@dataclass(frozen=True, eq=False)
class SampleTable:
    """Columnar samples: abscissae, values, first and second derivatives."""

    t: np.ndarray
    value: np.ndarray
    deriv1: np.ndarray
    deriv2: np.ndarray

    def __post_init__(self):
        cols = {}
        for name in ("t", "value", "deriv1", "deriv2"):
            cols[name] = np.asarray(getattr(self, name), dtype=np.float64).reshape(-1)
        sizes = {a.size for a in cols.values()}
        if len(sizes) != 1:
            raise DimensionMismatch(f"columns must have equal length, got {sizes}")
        if cols["t"].size > 1 and not (np.diff(cols["t"]) >= 0.0).all():
            raise BadSpec("t column must be non-decreasing")
        for name, a in cols.items():
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    def __len__(self):
        return self.t.size


@dataclass(frozen=True, eq=False)
class LSpline:
    """Fitted tension interpolant (immutable)."""

    xi: float
    grid: KnotGrid
    values: np.ndarray
    moments: np.ndarray
    bc: object

    def eval(self, t):
        """Interpolant value at t (scalar or array).  Points outside the
        knot span extrapolate with the closed form of the end segments."""
        return self._evaluate(t, 0)

    __call__ = eval

    def eval_deriv(self, t, order=1):
        """Analytic first or second derivative at t."""
        if order not in (1, 2):
            raise InvalidOrder(f"order must be 1 or 2, got {order!r}")
        return self._evaluate(t, order)

    def eval_L(self, t):
        """Value of the tension operator d^2/dt^2 - xi^2 applied to the
        interpolant; at the knots this equals the stored moments."""
        return self._evaluate(t, 2) - self.xi**2 * self._evaluate(t, 0)

    def sample(self, count=None, at=None):
        """Sample values and derivatives onto a grid.

        Exactly one of ``count`` (uniform grid over the knot span, >= 2
        points) and ``at`` (explicit non-decreasing abscissae) must be
        given; anything else raises :class:`BadSpec`.
        """
        if (count is None) == (at is None):
            raise BadSpec("give exactly one of count= and at=")
        if count is not None:
            if int(count) != count or count < 2:
                raise BadSpec(f"count must be an integer >= 2, got {count!r}")
            ts = np.linspace(self.grid.t_start, self.grid.t_end, int(count))
        else:
            ts = np.asarray(at, dtype=np.float64).reshape(-1)
            if not np.isfinite(ts).all():
                raise BadSpec("sample points must be finite")
            if ts.size > 1 and not (np.diff(ts) >= 0.0).all():
                raise BadSpec("sample points must be non-decreasing")
        return SampleTable(
            t=ts,
            value=self._evaluate(ts, 0),
            deriv1=self._evaluate(ts, 1),
            deriv2=self._evaluate(ts, 2),
        )

    def _evaluate(self, t, order):
        tt = np.asarray(t, dtype=np.float64)
        scalar = tt.ndim == 0
        tt = np.atleast_1d(tt)
        knots = self.grid.knots
        seg = self.grid.segment_index(tt)
        left = knots[seg]
        right = knots[seg + 1]
        h = self.grid.widths[seg]
        a1, b1, a2, b2 = basis._quads(self.xi, tt - left, right - tt, h, order)
        out = (
            self.moments[seg] * a1
            + self.moments[seg + 1] * b1
            + self.values[seg] * a2
            + self.values[seg + 1] * b2
        )
        return float(out[0]) if scalar else out


def fit(grid, z, xi, bc=NATURAL):
    """Fit the interpolant through (t_j, z_j) under the given boundary
    condition (:class:`Clamped` end slopes or :data:`NATURAL`).

    The moments come from one strictly diagonally dominant tridiagonal
    solve: all n of them in the clamped case, the n-2 interior ones in the
    natural case (the end moments are zero by definition and are stored as
    exact zeros).
    """
    if not isinstance(grid, KnotGrid):
        grid = KnotGrid(grid)
    xv = _tension_value(xi)
    z = np.array(z, dtype=np.float64, copy=True).reshape(-1)
    if z.size != grid.n:
        raise DimensionMismatch(f"got {z.size} data values for {grid.n} knots")
    if not np.isfinite(z).all():
        raise NonFiniteInput("data values must be finite")

    if isinstance(bc, Clamped):
        system = assemble_clamped(grid, xv, z, bc)
        moments = solve_tridiagonal(system, check_dominance=False)
    elif isinstance(bc, Natural):
        moments = np.zeros(grid.n)
        if grid.n > 2:
            system = assemble_natural(grid, xv, z)
            moments[1:-1] = solve_tridiagonal(system, check_dominance=False)
    else:
        raise TypeError(f"bc must be Clamped or Natural, got {type(bc).__name__}")

    if not np.isfinite(moments).all():
        raise NonFiniteInput("fit produced non-finite moments")
    z.setflags(write=False)
    moments.setflags(write=False)
    return LSpline(xi=xv, grid=grid, values=z, moments=moments, bc=bc)
