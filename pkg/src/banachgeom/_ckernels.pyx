# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the numeric kernels in ``_pykernels``.

Same chart conventions and signatures; see that module for documentation.
"""

import numpy as np

from libc.math cimport NAN, copysign, fabs, fmax, isfinite, pow

BACKEND_NAME = "cython"


cdef inline double _chart_coord(double t, double p, bint is_inf) nogil:
    cdef double r
    if is_inf:
        return 1.0
    r = 1.0 - pow(fabs(t), p)
    if r <= 0.0:
        return 0.0
    return pow(r, 1.0 / p)


cdef inline double _tz_norm(double a, double b, double c, double d,
                            double p, bint is_inf, int chart, double t) nogil:
    cdef double w = _chart_coord(t, p, is_inf)
    cdef double z1, z2, u, v
    if chart == 0:
        z1 = w
        z2 = t
    else:
        z1 = t
        z2 = w
    u = a * z1 + b * z2
    v = c * z1 + d * z2
    if is_inf:
        return fmax(fabs(u), fabs(v))
    return pow(pow(fabs(u), p) + pow(fabs(v), p), 1.0 / p)


def tz_norm(double a, double b, double c, double d, double p, bint is_inf,
            int chart, double t):
    return _tz_norm(a, b, c, d, p, is_inf, chart, t)


def chart_scan(double a, double b, double c, double d, double p, bint is_inf,
               int chart, int n):
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[:] out = out_arr
    cdef int i
    cdef double t, step
    step = 2.0 / (n - 1)
    for i in range(n):
        t = -1.0 + step * i
        if i == n - 1:
            t = 1.0
        out[i] = _tz_norm(a, b, c, d, p, is_inf, chart, t)
    return out_arr


cdef inline double _chart_deriv(double a, double b, double c, double d,
                                double p, int chart, double t) nogil:
    # Sign-equivalent derivative of ||T z(t)||_p for finite p, |t| < 1; see
    # the _pykernels twin.
    cdef double r, w, wp, u, v, du, dv
    r = 1.0 - pow(fabs(t), p)
    if r <= 0.0:
        return NAN
    w = pow(r, 1.0 / p)
    wp = -copysign(pow(fabs(t), p - 1.0), t) * pow(w, 1.0 - p)
    if chart == 0:
        u = a * w + b * t
        v = c * w + d * t
        du = a * wp + b
        dv = c * wp + d
    else:
        u = a * t + b * w
        v = c * t + d * w
        du = a + b * wp
        dv = c + d * wp
    return copysign(pow(fabs(u), p - 1.0), u) * du + copysign(pow(fabs(v), p - 1.0), v) * dv


def refine_max(double a, double b, double c, double d, double p, bint is_inf,
               int chart, double lo, double hi, int iters):
    cdef int k
    cdef double m, dm, dlo, dhi, m1, m2, f1, f2, t
    if (not is_inf) and -1.0 < lo and hi < 1.0:
        dlo = _chart_deriv(a, b, c, d, p, chart, lo)
        dhi = _chart_deriv(a, b, c, d, p, chart, hi)
        if isfinite(dlo) and isfinite(dhi) and dlo > 0.0 > dhi:
            for k in range(iters):
                m = 0.5 * (lo + hi)
                dm = _chart_deriv(a, b, c, d, p, chart, m)
                if dm == 0.0:
                    lo = m
                    hi = m
                    break
                if dm > 0.0:
                    lo = m
                else:
                    hi = m
                if hi - lo <= 1e-15 * fmax(1.0, fabs(lo)):
                    break
            t = 0.5 * (lo + hi)
            return t, _tz_norm(a, b, c, d, p, is_inf, chart, t)
    for k in range(iters):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        f1 = _tz_norm(a, b, c, d, p, is_inf, chart, m1)
        f2 = _tz_norm(a, b, c, d, p, is_inf, chart, m2)
        if f1 < f2:
            lo = m1
        else:
            hi = m2
    t = 0.5 * (lo + hi)
    return t, _tz_norm(a, b, c, d, p, is_inf, chart, t)


def lambda_scan(x, y, double p, bint is_inf, double lo, double hi, int steps):
    x_arr = np.ascontiguousarray(x, dtype=np.float64)
    y_arr = np.ascontiguousarray(y, dtype=np.float64)
    cdef double[:] xv = x_arr
    cdef double[:] yv = y_arr
    cdef int n = xv.shape[0]
    cdef int i, j, best_i
    cdef double lam, val, acc, coord, best, step
    step = (hi - lo) / (steps - 1)
    best = 1e308
    best_i = 0
    for i in range(steps):
        lam = lo + step * i
        if i == steps - 1:
            lam = hi
        if is_inf:
            acc = 0.0
            for j in range(n):
                coord = fabs(xv[j] + lam * yv[j])
                if coord > acc:
                    acc = coord
            val = acc
        else:
            acc = 0.0
            for j in range(n):
                acc += pow(fabs(xv[j] + lam * yv[j]), p)
            val = pow(acc, 1.0 / p)
        if val < best:
            best = val
            best_i = i
    lam = lo + step * best_i
    if best_i == steps - 1:
        lam = hi
    return best, lam
