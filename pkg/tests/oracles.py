"""Independent oracles used by the tests.

These deliberately avoid the library's own norm/attainment code paths:
the SVD oracle is the closed-form symmetric 2x2 eigenproblem, and the grid
oracle is a direct dense scan of the unit sphere.
"""

from __future__ import annotations

import math


def svd2_top(a, b, c, d):
    """Top singular value and a unit right-singular vector of [[a,b],[c,d]],
    via the closed-form eigendecomposition of T^t T."""
    e = a * a + c * c
    f = a * b + c * d
    g = b * b + d * d
    tr, det = e + g, e * g - f * f
    disc = max(tr * tr / 4.0 - det, 0.0)
    lam = tr / 2.0 + math.sqrt(disc)
    v1 = (f, lam - e)
    v2 = (lam - g, f)
    v = v1 if math.hypot(*v1) >= math.hypot(*v2) else v2
    n = math.hypot(*v)
    if n == 0.0:  # multiple of an isometry: every direction is singular
        v, n = (1.0, 0.0), 1.0
    return math.sqrt(lam), (v[0] / n, v[1] / n)


def sphere_points(p, samples):
    """Dense points of the l_p^2 unit sphere (finite p or inf)."""
    pts = []
    for i in range(samples):
        t = -1.0 + 2.0 * i / (samples - 1)
        if p == "inf":
            w = 1.0
        else:
            w = max(1.0 - abs(t) ** p, 0.0) ** (1.0 / p)
        pts.extend([(w, t), (t, w), (-w, -t), (-t, -w)])
    return pts


def grid_operator_norm(a, b, c, d, p, samples=200001):
    """Brute-force sup of ||Tz|| over a dense sphere grid, with argmax."""
    best, arg = -1.0, None
    for (z1, z2) in sphere_points(p, samples):
        u, v = a * z1 + b * z2, c * z1 + d * z2
        val = max(abs(u), abs(v)) if p == "inf" else (abs(u) ** p + abs(v) ** p) ** (1.0 / p)
        if val > best:
            best, arg = val, (z1, z2)
    return best, arg


def grid_min_norm_along(x, y, p, lo, hi, steps=200001):
    """Brute-force min over lam of ||x + lam*y||_p."""
    best = math.inf
    for i in range(steps):
        lam = lo + (hi - lo) * i / (steps - 1)
        coords = [xc + lam * yc for xc, yc in zip(x, y)]
        if p == "inf":
            val = max(abs(c) for c in coords)
        else:
            val = sum(abs(c) ** p for c in coords) ** (1.0 / p)
        best = min(best, val)
    return best
