"""Tension-spline interpolation (order-four L-splines).

Fit a twice continuously differentiable interpolant whose pieces solve
``(d^2/dt^2 - xi^2)^2 w = 0`` between knots, under clamped (prescribed end
slopes) or natural boundary conditions.  ``xi = 0`` is the classical cubic
spline; large ``xi`` pulls the curve toward piecewise-linear/exponential
behavior.  Fitting is a single strictly diagonally dominant tridiagonal
solve, O(n) in the number of knots.

Quick start::

    import numpy as np
    from lsplines import fit, Clamped

    t = np.linspace(0.0, 1.0, 7)
    model = fit(t, np.sin(25 * t), xi=5.0, bc=Clamped(25.0, 25.0))
    model(0.5)                     # value anywhere
    model.eval_deriv(0.5, 1)       # analytic derivative
    model.sample(count=200)        # columnar samples
"""

from . import errors
from .basis import BasisQuad, Segment, basis_derivs, basis_derivs2, basis_values
from .kernel import Tension
from .solver import solve_tridiagonal
from .spline import LSpline, SampleTable, fit
from .system import (
    NATURAL,
    Clamped,
    KnotGrid,
    Natural,
    TridiagonalSystem,
    assemble_clamped,
    assemble_natural,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "errors",
    "Tension",
    "KnotGrid",
    "Clamped",
    "Natural",
    "NATURAL",
    "TridiagonalSystem",
    "assemble_clamped",
    "assemble_natural",
    "solve_tridiagonal",
    "Segment",
    "BasisQuad",
    "basis_values",
    "basis_derivs",
    "basis_derivs2",
    "LSpline",
    "SampleTable",
    "fit",
]
