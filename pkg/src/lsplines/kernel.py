"""Numerically stable hyperbolic kernels for order-four tension splines.

Everything here is an elementary function of the tension ``xi`` and a
time-like argument.  The defining expressions contain differences like
``x*cosh(x) - sinh(x)`` that cancel catastrophically for small ``x`` and
ratios of exponentials that overflow for large ``x``, so each function is
evaluated in one of three regimes selected on ``|xi * h|``:

* below ``SMALL_THRESHOLD``: truncated Taylor series (cancellation-free,
  truncation error well under 1e-16 at the threshold);
* up to ``LARGE_THRESHOLD``: the defining formulas via sinh/cosh;
* above: exp(-x)-scaled rearrangements, which are exact algebra and keep
  every intermediate bounded for arguments up to ``xi*h ~ 1e4`` and beyond.

``xi == 0`` falls through the series branch and reproduces the classical
cubic-spline limits exactly.  All functions accept scalars or numpy arrays
for the time-like argument and are pure, so concurrent use is safe.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonFiniteInput

__all__ = [
    "SMALL_THRESHOLD",
    "LARGE_THRESHOLD",
    "Regime",
    "Tension",
    "regime",
    "phi",
    "phi_prime",
    "phi_second",
    "psi",
    "rho",
    "sigma",
    "coth_scaled",
    "csch_scaled",
    "xi_coth",
    "xi_csch",
    "sinh_ratio",
    "xi_cosh_ratio",
    "phi_ratio",
    "phi_prime_ratio",
    "phi_pp_ratio",
]

# Series/direct switch.  The direct formulas lose roughly 3*log10(1/x)
# digits to cancellation, so the switch sits where that loss is still a
# couple of ulp (~1e-15 at x = 0.5) while the series needs only ~10 terms.
SMALL_THRESHOLD = 0.5
# Direct/scaled switch; sinh(30)^2 ~ 2.9e25 is far from overflow and the
# scaled forms agree with the direct ones to ~1e-24 there.
LARGE_THRESHOLD = 30.0


class Regime(enum.Enum):
    SERIES_SMALL = "series-small"
    DIRECT = "direct"
    ASYMPTOTIC_LARGE = "asymptotic-large"


def regime(x):
    """Evaluation branch used at reduced argument ``x = xi*h`` (pure in |x|)."""
    ax = abs(x)
    if ax < SMALL_THRESHOLD:
        return Regime.SERIES_SMALL
    if ax <= LARGE_THRESHOLD:
        return Regime.DIRECT
    return Regime.ASYMPTOTIC_LARGE


@dataclass(frozen=True)
class Tension:
    """Tension parameter, units 1/t.  Zero selects the cubic-spline limit."""

    xi: float

    def __post_init__(self):
        xi = float(self.xi)
        if not math.isfinite(xi):
            raise NonFiniteInput(f"tension must be finite, got {self.xi!r}")
        if xi < 0.0:
            raise DomainError(f"tension must be nonnegative, got {self.xi!r}")
        object.__setattr__(self, "xi", xi)

    def __float__(self):
        return self.xi


def _tension_value(xi) -> float:
    if isinstance(xi, Tension):
        return xi.xi
    return Tension(xi).xi


# sum_{k>=1} k y^{k-1} / (2k+1)!  -- shows up both in Phi (y = (xi t)^2,
# Phi = t^3 * P) and in sigma (y = (xi h)^2, sigma = h * P / sinhc^2).
_P_COEFFS = [k / math.factorial(2 * k + 1) for k in range(1, 12)]
# sum_{k>=1} 2^(2k-1) y^(k-1) / (2k+1)!  -- rho = h * R / sinhc^2.
_R_COEFFS = [2 ** (2 * k - 1) / math.factorial(2 * k + 1) for k in range(1, 12)]
# sinh(w)/w = sum_{k>=0} y^k / (2k+1)!
_SINHC_COEFFS = [1.0 / math.factorial(2 * k + 1) for k in range(0, 10)]


def _horner(coeffs, y):
    acc = np.full_like(y, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * y + c
    return acc


def _prep(t):
    arr = np.asarray(t, dtype=np.float64)
    scalar = arr.ndim == 0
    return (np.atleast_1d(arr), scalar)


def _ret(out, scalar):
    return float(out[0]) if scalar else out


def _sinhc(w):
    """sinh(w)/w for w >= 0 elementwise; equals 1 at w = 0."""
    out = np.empty_like(w)
    small = w < SMALL_THRESHOLD
    if small.any():
        ws = w[small]
        out[small] = _horner(_SINHC_COEFFS, ws * ws)
    if not small.all():
        big = ~small
        wb = w[big]
        with np.errstate(over="ignore"):
            out[big] = np.sinh(wb) / wb
    return out


def phi(xi, t):
    """Fundamental kernel (xi*t*cosh(xi*t) - sinh(xi*t)) / (2*xi**3).

    Odd in t; the xi -> 0 limit is t**3/6.  Relative error stays at the
    few-ulp level in every regime.
    """
    xv = _tension_value(xi)
    tt, scalar = _prep(t)
    if xv == 0.0:
        return _ret(tt * tt * tt / 6.0, scalar)
    w = xv * np.abs(tt)
    out = np.empty_like(w)
    small = w < SMALL_THRESHOLD
    if small.any():
        ts = tt[small]
        ws = w[small]
        out[small] = ts * ts * ts * _horner(_P_COEFFS, ws * ws)
    if not small.all():
        big = ~small
        wb = w[big]
        numer = np.empty_like(wb)
        mid = wb <= LARGE_THRESHOLD
        if mid.any():
            wm = wb[mid]
            numer[mid] = wm * np.cosh(wm) - np.sinh(wm)
        if not mid.all():
            huge = ~mid
            wh = wb[huge]
            with np.errstate(over="ignore"):
                # e^w (w(1+E) - (1-E)) / 2 with E = e^(-2w); the exp is
                # applied in two half-steps so results near the overflow
                # boundary stay finite when they are representable.
                E = np.exp(-2.0 * wh)
                half = np.exp(0.5 * wh)
                numer[huge] = half * (half * (0.5 * (wh * (1.0 + E) - (1.0 - E))))
        out[big] = np.sign(tt[big]) * numer / (2.0 * xv**3)
    return _ret(out, scalar)


def phi_prime(xi, t):
    """First derivative of :func:`phi`: t*sinh(xi*t)/(2*xi), even in t."""
    xv = _tension_value(xi)
    tt, scalar = _prep(t)
    w = xv * np.abs(tt)
    return _ret(0.5 * tt * tt * _sinhc(w), scalar)


def phi_second(xi, t):
    """Second derivative of :func:`phi`: sinh(xi*t)/(2*xi) + t*cosh(xi*t)/2.

    Both addends carry a common factor t/2: sinh(xi t)/(2 xi) = t*sinhc/2.
    Odd in t; the xi -> 0 limit is t.
    """
    xv = _tension_value(xi)
    tt, scalar = _prep(t)
    w = xv * np.abs(tt)
    with np.errstate(over="ignore"):
        out = 0.5 * tt * (_sinhc(w) + np.cosh(w))
    return _ret(out, scalar)


def psi(xi, t):
    """Companion kernel sinh(xi*t)/xi; odd in t, equal to t at xi = 0."""
    xv = _tension_value(xi)
    tt, scalar = _prep(t)
    w = xv * np.abs(tt)
    return _ret(tt * _sinhc(w), scalar)


def _check_positive(h, name):
    if not np.all(h > 0.0):
        raise DomainError(f"{name} must be positive and finite")


def _rho_sigma_arrays(xv, h):
    """rho(h) and sigma(h) together; h validated by the callers."""
    if xv == 0.0:
        return h / 3.0, h / 6.0
    x = xv * h
    rho_out = np.empty_like(x)
    sig_out = np.empty_like(x)
    small = x < SMALL_THRESHOLD
    if small.any():
        xs = x[small]
        hs = h[small]
        y = xs * xs
        sc = _horner(_SINHC_COEFFS, y)
        sc2 = sc * sc
        rho_out[small] = hs * _horner(_R_COEFFS, y) / sc2
        sig_out[small] = hs * _horner(_P_COEFFS, y) / sc2
    if not small.all():
        big = ~small
        xb = x[big]
        rb = np.empty_like(xb)
        sb = np.empty_like(xb)
        mid = xb <= LARGE_THRESHOLD
        if mid.any():
            xm = xb[mid]
            s = np.sinh(xm)
            c = np.cosh(xm)
            denom = 2.0 * xv * s * s
            rb[mid] = (s * c - xm) / denom
            sb[mid] = (xm * c - s) / denom
        if not mid.all():
            huge = ~mid
            xh = xb[huge]
            em = np.exp(-xh)
            E = em * em
            d = -np.expm1(-2.0 * xh)  # 1 - e^(-2x)
            d2 = d * d
            rb[huge] = ((1.0 - E * E) - 4.0 * xh * E) / (2.0 * xv * d2)
            sb[huge] = ((xh - 1.0) * em + (xh + 1.0) * em * E) / (xv * d2)
        rho_out[big] = rb
        sig_out[big] = sb
    return rho_out, sig_out


def rho(xi, h):
    """Diagonal weight of the moment system; h/3 at xi = 0, -> 1/(2 xi) for
    large xi*h.  Strictly positive; raises DomainError for h <= 0."""
    xv = _tension_value(xi)
    hh, scalar = _prep(h)
    _check_positive(hh, "h")
    out, _ = _rho_sigma_arrays(xv, hh)
    return _ret(out, scalar)


def sigma(xi, h):
    """Off-diagonal weight of the moment system; h/6 at xi = 0, decays like
    h*exp(-xi*h) for large xi*h (underflowing to +0 past xi*h ~ 745)."""
    xv = _tension_value(xi)
    hh, scalar = _prep(h)
    _check_positive(hh, "h")
    _, out = _rho_sigma_arrays(xv, hh)
    return _ret(out, scalar)


def coth_scaled(x):
    """cosh(x)/sinh(x) for x > 0, via exp(-x)-scaled algebra (no overflow)."""
    xx, scalar = _prep(x)
    _check_positive(xx, "x")
    out = (1.0 + np.exp(-2.0 * xx)) / (-np.expm1(-2.0 * xx))
    return _ret(out, scalar)


def csch_scaled(x):
    """1/sinh(x) for x > 0, via exp(-x)-scaled algebra (no overflow)."""
    xx, scalar = _prep(x)
    _check_positive(xx, "x")
    out = 2.0 * np.exp(-xx) / (-np.expm1(-2.0 * xx))
    return _ret(out, scalar)


def _xi_coth_csch_arrays(xv, h):
    """xi*coth(xi*h) and xi*csch(xi*h); both limit to 1/h as xi -> 0."""
    if xv == 0.0:
        inv = 1.0 / h
        return inv, inv.copy()
    x = xv * h
    with np.errstate(divide="ignore", invalid="ignore"):
        d = -np.expm1(-2.0 * x)
        ct = xv * (1.0 + np.exp(-2.0 * x)) / d
        cs = xv * 2.0 * np.exp(-x) / d
    underflow = x == 0.0  # xi*h rounded to zero: use the analytic limit
    if underflow.any():
        ct[underflow] = 1.0 / h[underflow]
        cs[underflow] = 1.0 / h[underflow]
    return ct, cs


def xi_coth(xi, h):
    """xi*coth(xi*h) for h > 0; equals 1/h at xi = 0."""
    xv = _tension_value(xi)
    hh, scalar = _prep(h)
    _check_positive(hh, "h")
    out, _ = _xi_coth_csch_arrays(xv, hh)
    return _ret(out, scalar)


def xi_csch(xi, h):
    """xi/sinh(xi*h) for h > 0; equals 1/h at xi = 0."""
    xv = _tension_value(xi)
    hh, scalar = _prep(h)
    _check_positive(hh, "h")
    _, out = _xi_coth_csch_arrays(xv, hh)
    return _ret(out, scalar)


# --- scaled ratios used by the segment basis ---------------------------------
#
# The basis functions are quotients like Phi(v)/psi(h) in which numerator and
# denominator grow like e^(xi v) and e^(xi h).  Evaluating them separately
# would overflow long before the quotient does, so the common exponential is
# cancelled symbolically here.  ``h`` is a positive segment width; ``a`` may
# have either sign (evaluation outside the segment is legitimate).


def sinh_ratio(xi, a, h):
    """sinh(xi*a)/sinh(xi*h); a/h at xi = 0."""
    xv = _tension_value(xi)
    aa, scalar = _prep(a)
    hh = np.atleast_1d(np.asarray(h, dtype=np.float64))
    if xv == 0.0:
        return _ret(aa / hh, scalar)
    w = xv * np.abs(aa)
    x = xv * hh
    with np.errstate(over="ignore"):
        out = np.sign(aa) * np.exp(w - x) * (np.expm1(-2.0 * w) / np.expm1(-2.0 * x))
    return _ret(out, scalar)


def xi_cosh_ratio(xi, a, h):
    """xi*cosh(xi*a)/sinh(xi*h); 1/h at xi = 0.  Even in a."""
    xv = _tension_value(xi)
    aa, scalar = _prep(a)
    hh = np.atleast_1d(np.asarray(h, dtype=np.float64))
    if xv == 0.0:
        return _ret(1.0 / hh + 0.0 * aa, scalar)
    w = xv * np.abs(aa)
    x = xv * hh
    with np.errstate(over="ignore"):
        out = xv * np.exp(w - x) * (1.0 + np.exp(-2.0 * w)) / (-np.expm1(-2.0 * x))
    return _ret(out, scalar)


def phi_ratio(xi, a, h):
    """Phi(xi, a)/psi(xi, h); a**3/(6h) at xi = 0.  Odd in a."""
    xv = _tension_value(xi)
    aa, scalar = _prep(a)
    hh = np.atleast_1d(np.asarray(h, dtype=np.float64))
    if xv == 0.0:
        return _ret(aa * aa * aa / (6.0 * hh), scalar)
    w = xv * np.abs(aa)
    x = xv * np.broadcast_to(hh, w.shape)
    out = np.empty_like(w)
    dx = -np.expm1(-2.0 * x)  # 1 - e^(-2x)
    small = w < SMALL_THRESHOLD
    if small.any():
        ws = w[small]
        # numerator w*cosh(w) - sinh(w) = 2 w^3 P(w^2), series branch
        numer = 2.0 * ws * ws * ws * _horner(_P_COEFFS, ws * ws)
        out[small] = numer * np.exp(-x[small]) / (xv * xv * dx[small])
    if not small.all():
        big = ~small
        wb = w[big]
        with np.errstate(over="ignore"):
            E = np.exp(-2.0 * wb)
            out[big] = (
                np.exp(wb - x[big])
                * (wb * (1.0 + E) - (1.0 - E))
                / (2.0 * xv * xv * dx[big])
            )
    return _ret(np.sign(aa) * out, scalar)


def phi_prime_ratio(xi, a, h):
    """Phi'(xi, a)/psi(xi, h); a**2/(2h) at xi = 0.  Even in a."""
    aa, scalar = _prep(a)
    out = 0.5 * aa * sinh_ratio(xi, aa, h)
    return _ret(np.atleast_1d(out), scalar)


def phi_pp_ratio(xi, a, h):
    """Phi''(xi, a)/psi(xi, h); a/h at xi = 0.  Odd in a."""
    aa, scalar = _prep(a)
    out = 0.5 * sinh_ratio(xi, aa, h) + 0.5 * aa * xi_cosh_ratio(xi, aa, h)
    return _ret(np.atleast_1d(out), scalar)
