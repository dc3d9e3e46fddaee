"""2x2 operators on l_p^2: numeric operator norm, norm-attainment sets,
kernel, isometry-multiple detection, Daugavet residual, invariant lines.

The numeric norm parametrizes the upper half of the unit sphere by two
charts (see :mod:`banachgeom._pykernels`), scans a dense grid, and refines
every local maximum by ternary search.  Antipodal completion then covers the
whole sphere, since ||T(-z)|| = ||Tz||.

Exact enumeration of M_T for integer p lives in :mod:`banachgeom.exact_enum`;
this module also provides the exact closed-form operator norms for p in
{1, inf} (max column / row sums), which the non-smooth test suites use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .errors import (
    DegenerateOperatorError,
    DomainError,
    IsometryLikeError,
    UnsupportedExponentError,
)
from .space_core import Exponent, Vec, as_vec, is_exact_scalar, p_norm, sign, support_coords

ARGMAX_REL_TOL = 1e-9     # operator_norm_numeric: "within tol of the max"
MT_NUMERIC_TOL = 1e-8     # mt_numeric default certificate tolerance
CLUSTER_RADIUS = 1e-6     # chart-parameter clustering radius for M_T points


@dataclass(frozen=True)
class Operator2:
    """Matrix (a b; c d) acting on l_p^2 in the standard ordered basis."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for entry in self.entries:
            if isinstance(entry, float) and not math.isfinite(entry):
                raise DomainError(f"non-finite matrix entry {entry!r}")

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_exact(self) -> bool:
        return all(is_exact_scalar(e) for e in self.entries)

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, v) -> Vec:
        v = as_vec(v)
        if len(v) != 2:
            raise DomainError("Operator2 acts on 2-vectors")
        return Vec((self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]))

    def to_float(self) -> "Operator2":
        return Operator2(*(float(e) for e in self.entries))

    def add_identity(self) -> "Operator2":
        one = 1 if self.is_exact else 1.0
        return Operator2(self.a + one, self.b, self.c, self.d + one)

    def scale(self, t) -> "Operator2":
        return Operator2(*(t * e for e in self.entries))

    def inverse(self) -> "Operator2":
        dt = self.det()
        if dt == 0:
            raise DomainError("operator is singular")
        if self.is_exact:
            dt = Fraction(dt)
        return Operator2(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    @classmethod
    def identity(cls) -> "Operator2":
        return cls(1, 0, 0, 1)


def apply(T: Operator2, v) -> Vec:
    """Matrix-vector product; exact on the rational path."""
    return T.apply(v)


@dataclass(frozen=True)
class AttainmentSet:
    """A finite antipodally-closed description of M_T = {x in S_X : ||Tx|| = ||T||}.

    ``whole_sphere`` is the sentinel for scalar multiples of isometries,
    where M_T = S_X and enumeration is meaningless.  On the exact path
    ``norm_pow_bounds`` carries a certified rational interval around
    ||T||^p."""

    norm_value: float
    points: tuple
    certificate: str
    whole_sphere: bool = False
    norm_pow_bounds: Optional[tuple] = None

    def __len__(self) -> int:
        return len(self.points)


class _WholePlane:
    """Sentinel: the kernel of the zero operator is everything."""

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "WHOLE_PLANE"


WHOLE_PLANE = _WholePlane()


# ---------------------------------------------------------------------------
# Numeric operator norm and M_T
# ---------------------------------------------------------------------------


def _chart_point(t: float, pf: float, is_inf: bool, chart: int) -> Tuple[float, float]:
    if is_inf:
        w = 1.0
    else:
        r = 1.0 - abs(t) ** pf
        w = r ** (1.0 / pf) if r > 0.0 else 0.0
    return (w, t) if chart == 0 else (t, w)


def _local_max_brackets(vals: np.ndarray) -> List[Tuple[int, int]]:
    """Index runs that are local maxima of vals (plateaus collapsed)."""
    n = len(vals)
    ge_left = np.empty(n, dtype=bool)
    ge_right = np.empty(n, dtype=bool)
    ge_left[0] = True
    ge_left[1:] = vals[1:] >= vals[:-1]
    ge_right[-1] = True
    ge_right[:-1] = vals[:-1] >= vals[1:]
    idx = np.nonzero(ge_left & ge_right)[0]
    runs: List[Tuple[int, int]] = []
    start = prev = None
    for i in idx:
        i = int(i)
        if prev is None:
            start = i
        elif i != prev + 1:
            runs.append((start, prev))
            start = i
        prev = i
    if prev is not None:
        runs.append((start, prev))
    return runs


def _refined_maxima(T: Operator2, p: Exponent, grid: int, refine_iters: int):
    """All refined local maxima of t -> ||T z(t)|| over both charts.

    Returns a list of (chart, t, value), deduplicated across the chart
    overlap."""
    a, b, c, d = (float(e) for e in T.entries)
    pf = p.as_float()
    is_inf = p.is_inf
    ts = np.linspace(-1.0, 1.0, grid)
    found: List[Tuple[int, float, float]] = []
    for chart in (0, 1):
        vals = np.asarray(_kernels.chart_scan(a, b, c, d, pf, is_inf, chart, grid))
        for s, e in _local_max_brackets(vals):
            lo = float(ts[max(0, s - 1)])
            hi = float(ts[min(grid - 1, e + 1)])
            t_hat, v_hat = _kernels.refine_max(a, b, c, d, pf, is_inf, chart, lo, hi, refine_iters)
            grid_best = float(vals[s:e + 1].max())
            if grid_best > v_hat:
                t_hat, v_hat = float(ts[s + int(vals[s:e + 1].argmax())]), grid_best
            found.append((chart, float(t_hat), float(v_hat)))
    # Dedupe points that the two charts both see (first quadrant overlap).
    out: List[Tuple[int, float, float, Tuple[float, float]]] = []
    for chart, t, v in found:
        pt = _chart_point(t, pf, is_inf, chart)
        for k, (_, _, v2, pt2) in enumerate(out):
            if max(abs(pt[0] - pt2[0]), abs(pt[1] - pt2[1])) <= 1e-9:
                if v > v2:
                    out[k] = (chart, t, v, pt)
                break
        else:
            out.append((chart, t, v, pt))
    return out


def operator_norm_numeric(T: Operator2, p, grid: int = 4096,
                          refine_iters: int = 60) -> Tuple[float, List[Vec]]:
    """Numeric ||T|| on l_p^2 plus the refined maximizers within tolerance.

    The grid is dense enough that every global maximizer is bracketed by a
    grid local maximum; ternary refinement then localizes it.  The returned
    value underestimates ||T|| by at most the refinement resolution."""
    p = Exponent.coerce(p)
    if grid < 64:
        raise DomainError("grid must be at least 64")
    maxima = _refined_maxima(T, p, grid, refine_iters)
    vmax = max(v for _, _, v, _ in maxima)
    tol = ARGMAX_REL_TOL * max(1.0, vmax)
    pts = [Vec(pt) for _, _, v, pt in maxima if v >= vmax - tol]
    return vmax, pts


def _cluster_points(items, radius: float):
    """Greedy clustering by l_inf distance; keeps the best-value member."""
    out = []
    for pt, v in items:
        for k, (pt2, v2) in enumerate(out):
            if max(abs(pt[0] - pt2[0]), abs(pt[1] - pt2[1])) <= radius:
                if v > v2:
                    out[k] = (pt, v)
                break
        else:
            out.append((pt, v))
    return out


def mt_numeric(T: Operator2, p, tol: float = MT_NUMERIC_TOL, grid: int = 4096,
               refine_iters: int = 60) -> AttainmentSet:
    """Numeric M_T: refined maxima within tol of the numeric norm, clustered
    and antipodally completed.  Scalar multiples of isometries come back as
    the whole-sphere sentinel, never enumerated."""
    p = Exponent.coerce(p)
    if T.is_zero:
        raise DegenerateOperatorError("M_T is about norm attainment of nonzero operators")
    s = is_isometry_multiple(T, p)
    if s is not None:
        return AttainmentSet(float(s), (), f"numeric({tol:g})", whole_sphere=True)
    maxima = _refined_maxima(T, p, grid, refine_iters)
    vmax = max(v for _, _, v, _ in maxima)
    near = [(pt, v) for _, _, v, pt in maxima if v >= vmax - tol]
    clustered = _cluster_points(near, CLUSTER_RADIUS)
    pts = {}
    for (x1, x2), _ in clustered:
        for q in ((x1 + 0.0, x2 + 0.0), (-x1 + 0.0, -x2 + 0.0)):
            key = (round(q[0], 9) + 0.0, round(q[1], 9) + 0.0)
            pts.setdefault(key, Vec(q))
    points = tuple(pts[k] for k in sorted(pts))
    return AttainmentSet(vmax, points, f"numeric({tol:g})")


# ---------------------------------------------------------------------------
# Kernel, isometry multiples, Daugavet, invariant lines
# ---------------------------------------------------------------------------


def kernel(T: Operator2, tol: float = 1e-12):
    """None if T is invertible, a spanning vector of the null line otherwise
    (scaled so max |coordinate| = 1, first nonzero coordinate positive);
    WHOLE_PLANE for T = 0.  Exact on the rational path."""
    if T.is_zero:
        return WHOLE_PLANE
    det = T.det()
    if T.is_exact:
        if det != 0:
            return None
    else:
        scale = max(abs(float(e)) for e in T.entries)
        if abs(float(det)) > tol * max(1.0, scale * scale):
            return None
    r1 = (T.a, T.b)
    r2 = (T.c, T.d)
    row = r1 if (r1[0] != 0 or r1[1] != 0) else r2
    v = (row[1], -row[0])
    m = max(abs(v[0]), abs(v[1]))
    if T.is_exact:
        v = (Fraction(v[0], 1) / m, Fraction(v[1], 1) / m)
    else:
        v = (float(v[0]) / float(m), float(v[1]) / float(m))
    lead = v[0] if v[0] != 0 else v[1]
    if lead < 0:
        v = (-v[0], -v[1])
    return Vec(v)


def is_isometry_multiple(T: Operator2, p, tol: float = 1e-9) -> Optional[float]:
    """The positive scalar s with T = s * (isometry of l_p^2), or None.

    For p = 2 isometries are the orthogonal matrices (T^t T = s^2 I); for
    every other p in [1, inf] the isometry group of l_p^2 is the signed
    permutations.  Exact decisions on the rational path."""
    p = Exponent.coerce(p)
    if T.is_zero:
        raise DomainError("the zero operator is not an isometry multiple")
    a, b, c, d = T.entries
    exact = T.is_exact
    scale = max(abs(float(e)) for e in T.entries)
    cmp_tol = 0.0 if exact else tol * max(1.0, scale)

    def near(u, v) -> bool:
        return u == v if exact else abs(float(u) - float(v)) <= cmp_tol

    if p.is_int and p.value == 2:
        c1 = a * a + c * c
        c2 = b * b + d * d
        dot = a * b + c * d
        ok = (c1 == c2 and dot == 0) if exact else (
            abs(float(c1) - float(c2)) <= tol * max(1.0, scale * scale)
            and abs(float(dot)) <= tol * max(1.0, scale * scale))
        if ok:
            return math.sqrt((float(c1) + float(c2)) / 2.0)
        return None
    if near(b, 0) and near(c, 0) and near(abs(a), abs(d)) and not near(a, 0):
        return abs(float(a))
    if near(a, 0) and near(d, 0) and near(abs(b), abs(c)) and not near(b, 0):
        return abs(float(b))
    return None


def daugavet_residual(T: Operator2, p, grid: int = 4096, refine_iters: int = 60) -> float:
    """(1 + ||T||) - ||I + T|| >= 0; zero (within tolerance) iff T satisfies
    the Daugavet equation.  Negative values beyond float noise would violate
    the triangle inequality and are treated as an internal error."""
    p = Exponent.coerce(p)
    n_t, _ = operator_norm_numeric(T, p, grid, refine_iters)
    n_it, _ = operator_norm_numeric(T.add_identity(), p, grid, refine_iters)
    res = (1.0 + n_t) - n_it
    if res < -1e-9:
        raise ArithmeticError(f"numeric norms violate the triangle inequality: {res}")
    return max(res, 0.0)


def invariant_line_check(T: Operator2, x0, p, tol: float = 1e-9) -> bool:
    """True iff T maps the orthogonal line x0^perp into itself.

    For smooth p the line is spanned by w = (-j(x0)_2, j(x0)_1); the check
    is colinearity of Tw with w, exact when T, x0 are rational and p is an
    integer."""
    p = Exponent.coerce(p)
    if not p.smooth():
        raise UnsupportedExponentError("x0^perp is a line only for smooth p")
    x0 = as_vec(x0)
    if x0.is_zero or len(x0) != 2:
        raise DomainError("x0 must be a nonzero 2-vector")
    j = support_coords(x0, p)
    w = Vec((-j[1], j[0]))
    tw = T.apply(w)
    cross = tw[0] * w[1] - tw[1] * w[0]
    if T.is_exact and w.is_exact:
        return cross == 0
    scale = max(1.0, float(max(abs(float(tw[0])), abs(float(tw[1]))))
                * float(max(abs(float(w[0])), abs(float(w[1])))))
    return abs(float(cross)) <= tol * scale


# ---------------------------------------------------------------------------
# Exact norms for the non-smooth exponents
# ---------------------------------------------------------------------------


def operator_norm_exact(T: Operator2, p) -> Tuple[Fraction, List[Vec]]:
    """Exact ||T|| and exact attainment points for p in {1, inf}.

    ||T||_inf->inf is the max absolute row sum, attained at the sign corner
    of the maximal row; ||T||_1->1 is the max absolute column sum, attained
    at the corresponding basis vector.  Only the listed attainment points
    (plus antipodes) are returned; on these spaces M_T may be infinite."""
    p = Exponent.coerce(p)
    if not T.is_exact:
        raise DomainError("operator_norm_exact needs rational entries")
    a, b, c, d = (Fraction(e) for e in T.entries)
    points: List[Vec] = []
    if p.is_inf:
        rows = (abs(a) + abs(b), abs(c) + abs(d))
        norm = max(rows)
        for (u, v), rsum in (((a, b), rows[0]), ((c, d), rows[1])):
            if rsum == norm:
                corner = Vec((sign(u) or 1, sign(v) or 1))
                if corner not in points:
                    points.append(corner)
    elif p.is_int and p.value == 1:
        cols = (abs(a) + abs(c), abs(b) + abs(d))
        norm = max(cols)
        for i, csum in enumerate(cols):
            if csum == norm:
                points.append(Vec((1, 0)) if i == 0 else Vec((0, 1)))
    else:
        raise UnsupportedExponentError("exact closed-form norms exist for p in {1, inf} only")
    full = []
    for q in points:
        full.append(q)
        full.append(-q)
    return norm, full


# ---------------------------------------------------------------------------
# Brute-force sampling for small n x n (used by the n = 3 corollary checks)
# ---------------------------------------------------------------------------


def operator_norm_sample(mat: Sequence[Sequence[float]], p, samples: int = 100000,
                         seed: int = 0, polish: int = 200) -> Tuple[float, Vec]:
    """Monte-Carlo lower bound for ||M|| on l_p^n with a local polish pass.

    Only l_p^2 gets first-class norm computation; this sampler exists for
    the finite-dimensional corollary checks in dimension 3."""
    p = Exponent.coerce(p)
    m = np.asarray(mat, dtype=float)
    n = m.shape[0]
    rng = np.random.default_rng(seed)
    zs = rng.standard_normal((samples, n))
    pf = p.as_float()
    if p.is_inf:
        norms = np.max(np.abs(zs), axis=1)
    else:
        norms = np.sum(np.abs(zs) ** pf, axis=1) ** (1.0 / pf)
    zs = zs / norms[:, None]
    imgs = zs @ m.T
    if p.is_inf:
        vals = np.max(np.abs(imgs), axis=1)
    else:
        vals = np.sum(np.abs(imgs) ** pf, axis=1) ** (1.0 / pf)
    best = int(np.argmax(vals))
    z = zs[best]

    def val_of(v):
        v = v / (np.max(np.abs(v)) if p.is_inf else np.sum(np.abs(v) ** pf) ** (1.0 / pf))
        w = m @ v
        return (np.max(np.abs(w)) if p.is_inf else np.sum(np.abs(w) ** pf) ** (1.0 / pf)), v

    fbest, z = val_of(z)
    step = 0.1
    for _ in range(polish):
        improved = False
        for k in range(n):
            for sgn in (1.0, -1.0):
                cand = z.copy()
                cand[k] += sgn * step
                f, cand = val_of(cand)
                if f > fbest:
                    fbest, z = f, cand
                    improved = True
        if not improved:
            step *= 0.5
            if step < 1e-12:
                break
    return float(fbest), Vec(tuple(float(v) for v in z))
