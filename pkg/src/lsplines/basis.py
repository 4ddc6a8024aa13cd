"""Per-segment basis functions of the order-four tension interpolant.

On a segment [t_left, t_right] the interpolant is a linear combination of
four functions: two "moment" shapes (a1, b1) that carry the values of the
tension operator at the endpoints, and two "value" shapes (a2, b2) that are
cardinal for the endpoint values.  Applying the second-order tension
operator d^2/dt^2 - xi^2 maps a1 -> a2 and b1 -> b2 and annihilates a2 and
b2, which is what makes the interpolation system tridiagonal.

All formulas are routed through the scaled ratios in :mod:`.kernel`, so a
segment with xi*(t_right - t_left) up to ~1e4 evaluates without overflow.
Evaluation outside the segment uses the same closed form (extrapolation is
the caller's policy decision, not this layer's).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernel
from .errors import DomainError
from .kernel import _prep, _tension_value

__all__ = ["Segment", "BasisQuad", "basis_values", "basis_derivs", "basis_derivs2"]


@dataclass(frozen=True)
class Segment:
    """One knot interval with its tension."""

    t_left: float
    t_right: float
    xi: float

    def __post_init__(self):
        left = float(self.t_left)
        right = float(self.t_right)
        if not (np.isfinite(left) and np.isfinite(right) and left < right):
            raise DomainError(
                f"segment requires finite t_left < t_right, got ({self.t_left!r}, {self.t_right!r})"
            )
        object.__setattr__(self, "t_left", left)
        object.__setattr__(self, "t_right", right)
        object.__setattr__(self, "xi", _tension_value(self.xi))

    @property
    def width(self):
        return self.t_right - self.t_left


@dataclass(frozen=True)
class BasisQuad:
    """Values of the four basis functions (or one of their derivatives)."""

    a1: float
    b1: float
    a2: float
    b2: float


def _quads(xi, u, v, h, order):
    """Core evaluation on arrays: u = t - t_left, v = t_right - t, h = width.

    Returns the (a1, b1, a2, b2) arrays for derivative order 0, 1 or 2.
    """
    F = kernel.phi_ratio(xi, h, h)  # Phi(h)/psi(h)
    if order == 0:
        a2 = kernel.sinh_ratio(xi, v, h)
        b2 = kernel.sinh_ratio(xi, u, h)
        a1 = kernel.phi_ratio(xi, v, h) - a2 * F
        b1 = kernel.phi_ratio(xi, u, h) - b2 * F
        return a1, b1, a2, b2
    if order == 1:
        da2 = -kernel.xi_cosh_ratio(xi, v, h)
        db2 = kernel.xi_cosh_ratio(xi, u, h)
        da1 = -kernel.phi_prime_ratio(xi, v, h) - da2 * F
        db1 = kernel.phi_prime_ratio(xi, u, h) - db2 * F
        return da1, db1, da2, db2
    if order == 2:
        xi2 = xi * xi
        dda2 = xi2 * kernel.sinh_ratio(xi, v, h)
        ddb2 = xi2 * kernel.sinh_ratio(xi, u, h)
        dda1 = kernel.phi_pp_ratio(xi, v, h) - dda2 * F
        ddb1 = kernel.phi_pp_ratio(xi, u, h) - ddb2 * F
        return dda1, ddb1, dda2, ddb2
    raise ValueError(f"order must be 0, 1 or 2, got {order!r}")


def _eval_segment(seg, t, order):
    tt, scalar = _prep(t)
    u = tt - seg.t_left
    v = seg.t_right - tt
    h = np.asarray(seg.width, dtype=np.float64)
    a1, b1, a2, b2 = _quads(seg.xi, u, v, h, order)
    if scalar:
        return BasisQuad(float(a1[0]), float(b1[0]), float(a2[0]), float(b2[0]))
    return BasisQuad(a1, b1, a2, b2)


def basis_values(seg, t):
    """Basis function values at t.  At t_left the quad is (0, 0, 1, 0) and
    at t_right it is (0, 0, 0, 1), exactly."""
    return _eval_segment(seg, t, 0)


def basis_derivs(seg, t):
    """Analytic first derivatives of the four basis functions at t."""
    return _eval_segment(seg, t, 1)


def basis_derivs2(seg, t):
    """Analytic second derivatives of the four basis functions at t."""
    return _eval_segment(seg, t, 2)
