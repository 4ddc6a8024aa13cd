"""Independent oracles used by the test suite.

Everything in this module is deliberately implemented without touching the
kernel/basis/solver code paths it is used to check: the dense solve is its
own Gaussian elimination with partial pivoting, the cubic splines use the
textbook moment formulation on top of that dense solve, and the
extended-precision kernel evaluations go straight through mpmath at 60
significant digits.  Agreement between these and the production code is
evidence, not tautology.  None of this is performance-sensitive.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, SingularMatrix

__all__ = [
    "dense_solve",
    "cubic_clamped_fit",
    "cubic_natural_fit",
    "fd_derivative",
    "mp_phi",
    "mp_phi_prime",
    "mp_psi",
    "mp_rho",
    "mp_sigma",
    "mp_coth",
    "mp_csch",
]

_PIVOT_FLOOR = 1e-300


def dense_solve(a, rhs):
    """Solve a dense square system by Gaussian elimination with partial
    pivoting.  Raises :class:`SingularMatrix` when a pivot collapses."""
    a = np.array(a, dtype=np.float64, copy=True)
    b = np.array(rhs, dtype=np.float64, copy=True).reshape(-1)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {a.shape}")
    m = a.shape[0]
    if b.size != m:
        raise DimensionMismatch(f"rhs has {b.size} entries for a {m}x{m} matrix")
    for k in range(m):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < _PIVOT_FLOOR:
            raise SingularMatrix(f"pivot magnitude below {_PIVOT_FLOOR:g} at column {k}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        if k + 1 < m:
            factors = a[k + 1 :, k] / a[k, k]
            a[k + 1 :, k:] -= np.outer(factors, a[k, k:])
            b[k + 1 :] -= factors * b[k]
    x = np.empty(m)
    for i in range(m - 1, -1, -1):
        x[i] = (b[i] - a[i, i + 1 :] @ x[i + 1 :]) / a[i, i]
    return x


class CubicMomentSpline:
    """Classical cubic spline in moment (second-derivative) form."""

    def __init__(self, knots, values, moments):
        self.knots = np.asarray(knots, dtype=np.float64)
        self.values = np.asarray(values, dtype=np.float64)
        self.moments = np.asarray(moments, dtype=np.float64)
        self.widths = np.diff(self.knots)

    def eval(self, t, order=0):
        t = np.asarray(t, dtype=np.float64)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        j = np.clip(np.searchsorted(self.knots, t, side="right") - 1, 0, self.knots.size - 2)
        h = self.widths[j]
        u = t - self.knots[j]
        v = self.knots[j + 1] - t
        mj, mj1 = self.moments[j], self.moments[j + 1]
        yj, yj1 = self.values[j], self.values[j + 1]
        if order == 0:
            out = (
                mj * v**3 / (6.0 * h)
                + mj1 * u**3 / (6.0 * h)
                + (yj - mj * h * h / 6.0) * v / h
                + (yj1 - mj1 * h * h / 6.0) * u / h
            )
        elif order == 1:
            out = (
                -mj * v**2 / (2.0 * h)
                + mj1 * u**2 / (2.0 * h)
                + (yj1 - yj) / h
                - (mj1 - mj) * h / 6.0
            )
        elif order == 2:
            out = mj * v / h + mj1 * u / h
        else:
            raise ValueError(f"order must be 0, 1 or 2, got {order!r}")
        return float(out[0]) if scalar else out

    __call__ = eval


def _cubic_moment_matrix(knots, values, first_row, last_row, rhs_first, rhs_last):
    knots = np.asarray(knots, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    n = knots.size
    h = np.diff(knots)
    a = np.zeros((n, n))
    b = np.zeros(n)
    for j in range(1, n - 1):
        a[j, j - 1] = h[j - 1] / 6.0
        a[j, j] = (h[j - 1] + h[j]) / 3.0
        a[j, j + 1] = h[j] / 6.0
        b[j] = (values[j + 1] - values[j]) / h[j] - (values[j] - values[j - 1]) / h[j - 1]
    a[0, : len(first_row)] = first_row
    a[-1, n - len(last_row) :] = last_row
    b[0] = rhs_first
    b[-1] = rhs_last
    return a, b


def cubic_clamped_fit(knots, values, d_left, d_right):
    """Textbook clamped cubic spline (prescribed end slopes)."""
    knots = np.asarray(knots, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    h = np.diff(knots)
    a, b = _cubic_moment_matrix(
        knots,
        values,
        first_row=[h[0] / 3.0, h[0] / 6.0],
        last_row=[h[-1] / 6.0, h[-1] / 3.0],
        rhs_first=(values[1] - values[0]) / h[0] - d_left,
        rhs_last=d_right - (values[-1] - values[-2]) / h[-1],
    )
    return CubicMomentSpline(knots, values, dense_solve(a, b))


def cubic_natural_fit(knots, values):
    """Textbook natural cubic spline (vanishing end curvature)."""
    a, b = _cubic_moment_matrix(
        knots, values, first_row=[1.0], last_row=[1.0], rhs_first=0.0, rhs_last=0.0
    )
    return CubicMomentSpline(knots, values, dense_solve(a, b))


def fd_derivative(f, t, order=1, step=1e-6):
    """Central finite difference of a callable, O(step**2) accurate."""
    if step <= 0.0:
        raise ValueError("step must be positive")
    if order == 1:
        return (f(t + step) - f(t - step)) / (2.0 * step)
    if order == 2:
        return (f(t + step) - 2.0 * f(t) + f(t - step)) / (step * step)
    raise ValueError(f"order must be 1 or 2, got {order!r}")


# --- extended-precision kernel oracle (tests only) ---------------------------

_MP_DPS = 60


def _mp():
    import mpmath

    return mpmath


def mp_phi(xi, t):
    mp = _mp()
    with mp.workdps(_MP_DPS):
        xi, t = mp.mpf(xi), mp.mpf(t)
        if xi == 0:
            return float(t**3 / 6)
        u = xi * t
        return float((u * mp.cosh(u) - mp.sinh(u)) / (2 * xi**3))


def mp_phi_prime(xi, t):
    mp = _mp()
    with mp.workdps(_MP_DPS):
        xi, t = mp.mpf(xi), mp.mpf(t)
        if xi == 0:
            return float(t * t / 2)
        return float(t * mp.sinh(xi * t) / (2 * xi))


def mp_psi(xi, t):
    mp = _mp()
    with mp.workdps(_MP_DPS):
        xi, t = mp.mpf(xi), mp.mpf(t)
        if xi == 0:
            return float(t)
        return float(mp.sinh(xi * t) / xi)


def mp_rho(xi, h):
    mp = _mp()
    with mp.workdps(_MP_DPS):
        xi, h = mp.mpf(xi), mp.mpf(h)
        if xi == 0:
            return float(h / 3)
        x = xi * h
        return float((mp.sinh(2 * x) - 2 * x) / (4 * xi * mp.sinh(x) ** 2))


def mp_sigma(xi, h):
    mp = _mp()
    with mp.workdps(_MP_DPS):
        xi, h = mp.mpf(xi), mp.mpf(h)
        if xi == 0:
            return float(h / 6)
        x = xi * h
        return float((x * mp.cosh(x) - mp.sinh(x)) / (2 * xi * mp.sinh(x) ** 2))


def mp_coth(x):
    mp = _mp()
    with mp.workdps(_MP_DPS):
        return float(mp.coth(mp.mpf(x)))


def mp_csch(x):
    mp = _mp()
    with mp.workdps(_MP_DPS):
        return float(mp.csch(mp.mpf(x)))
