"""Pure-Python (numpy) implementations of the hot numeric kernels.

Selected at import time by :mod:`banachgeom._kernels` when the compiled
extension is unavailable.  Signatures and semantics must match
``_ckernels.pyx`` exactly; both are exercised by the kernel tests and the
benchmark script.

Chart convention for the unit sphere of l_p^2, parameter t in [-1, 1]:

* chart 0:  z(t) = (w(t), t)
* chart 1:  z(t) = (t, w(t))

with w(t) = (1 - |t|**p)**(1/p) for finite p and w(t) = 1 for p = inf
(the right / top edge of the sup-norm square).
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def _chart_coord(t: float, p: float, is_inf: bool) -> float:
    if is_inf:
        return 1.0
    r = 1.0 - abs(t) ** p
    if r <= 0.0:
        return 0.0
    return r ** (1.0 / p)


def tz_norm(a, b, c, d, p, is_inf, chart, t):
    """||T z(t)||_p for a single chart parameter t."""
    w = _chart_coord(t, p, is_inf)
    z1, z2 = (w, t) if chart == 0 else (t, w)
    u = a * z1 + b * z2
    v = c * z1 + d * z2
    if is_inf:
        return max(abs(u), abs(v))
    return (abs(u) ** p + abs(v) ** p) ** (1.0 / p)


def chart_scan(a, b, c, d, p, is_inf, chart, n):
    """||T z(t)||_p on the n-point uniform grid over t in [-1, 1]."""
    t = np.linspace(-1.0, 1.0, n)
    if is_inf:
        w = np.ones_like(t)
    else:
        w = np.clip(1.0 - np.abs(t) ** p, 0.0, None) ** (1.0 / p)
    z1, z2 = (w, t) if chart == 0 else (t, w)
    u = a * z1 + b * z2
    v = c * z1 + d * z2
    if is_inf:
        return np.maximum(np.abs(u), np.abs(v))
    return (np.abs(u) ** p + np.abs(v) ** p) ** (1.0 / p)


def _chart_deriv(a, b, c, d, p, chart, t):
    """d/dt of ||T z(t)||_p**p / p for finite p and |t| < 1.

    Sign-equivalent to the norm's derivative.  Has no large-term
    cancellation at maxima on the coordinate axes, where value-based search
    stalls on the |t|**p flatness."""
    r = 1.0 - abs(t) ** p
    if r <= 0.0:
        return math.nan
    w = r ** (1.0 / p)
    wp = -math.copysign(abs(t) ** (p - 1.0), t) * w ** (1.0 - p)
    if chart == 0:
        u, v = a * w + b * t, c * w + d * t
        du, dv = a * wp + b, c * wp + d
    else:
        u, v = a * t + b * w, c * t + d * w
        du, dv = a + b * wp, c + d * wp
    return (math.copysign(abs(u) ** (p - 1.0), u) * du
            + math.copysign(abs(v) ** (p - 1.0), v) * dv)


def refine_max(a, b, c, d, p, is_inf, chart, lo, hi, iters):
    """Refine a maximum of t -> ||T z(t)|| inside the bracket [lo, hi].

    Bisects on the sign of the analytic derivative when the bracket is
    interior and genuinely brackets a sign change; falls back to ternary
    search otherwise (p = inf, brackets touching the chart poles, plateaus).
    Returns (t, value)."""
    if not is_inf and -1.0 < lo and hi < 1.0:
        dlo = _chart_deriv(a, b, c, d, p, chart, lo)
        dhi = _chart_deriv(a, b, c, d, p, chart, hi)
        if math.isfinite(dlo) and math.isfinite(dhi) and dlo > 0.0 > dhi:
            for _ in range(iters):
                m = 0.5 * (lo + hi)
                dm = _chart_deriv(a, b, c, d, p, chart, m)
                if dm == 0.0:
                    lo = hi = m
                    break
                if dm > 0.0:
                    lo = m
                else:
                    hi = m
                if hi - lo <= 1e-15 * max(1.0, abs(lo)):
                    break
            t = 0.5 * (lo + hi)
            return t, tz_norm(a, b, c, d, p, is_inf, chart, t)
    for _ in range(iters):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        f1 = tz_norm(a, b, c, d, p, is_inf, chart, m1)
        f2 = tz_norm(a, b, c, d, p, is_inf, chart, m2)
        if f1 < f2:
            lo = m1
        else:
            hi = m2
    t = 0.5 * (lo + hi)
    return t, tz_norm(a, b, c, d, p, is_inf, chart, t)


def lambda_scan(x, y, p, is_inf, lo, hi, steps):
    """Minimum of ||x + lam*y||_p over the uniform lam-grid on [lo, hi].

    x, y are length-n float sequences.  Returns (min_value, argmin_lam)."""
    lam = np.linspace(lo, hi, steps)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    pts = x[None, :] + lam[:, None] * y[None, :]
    if is_inf:
        vals = np.max(np.abs(pts), axis=1)
    else:
        vals = np.sum(np.abs(pts) ** p, axis=1) ** (1.0 / p)
    i = int(np.argmin(vals))
    return float(vals[i]), float(lam[i])
