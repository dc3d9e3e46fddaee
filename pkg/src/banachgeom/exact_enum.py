"""Exact enumeration of M_T on l_p^2 for integer p >= 2.

At a norm-attaining unit vector z = (x, kx) with x > 0, smoothness forces
T z ⊥_B T w for the (unique up to scale) orthogonal direction
w = (-j(z_2), j(z_1)).  Written out in support coordinates and divided by
j(x) > 0, the condition becomes

    F(k) = j(a + b k) * (a j(k) - b) + j(c + d k) * (c j(k) - d) = 0,

with j(t) = sign(t) |t|**(p-1).  For even p, j is the plain power t**(p-1)
and F is a single polynomial of degree <= 2p-2.  For odd p the line is split
at the sign breakpoints of (a + b k), (c + d k) and k; on each region F
restricts to a polynomial of degree <= 2p-2.  Real roots are isolated
exactly (squarefree decomposition + Sturm bisection), mapped to unit
vectors, and compared by certified rational intervals of ||T z(k)||^p =
(|a+bk|^p + |c+dk|^p) / (1 + |k|^p); the slope k = inf corresponds to the
separate candidate +-e_2.  Every point of M_T is among the candidates, and
every candidate attaining the maximum lies in M_T, so the argmax set *is*
M_T -- with |M_T| <= 2(8p-5) as the closed-form bound guarantees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import _poly
from .errors import (
    DegenerateOperatorError,
    DomainError,
    IsometryLikeError,
    IsometryMultipleError,
)
from .operators import AttainmentSet, Operator2, is_isometry_multiple
from .space_core import Exponent, Vec, as_vec, sign, support_coords

# Interval widths: ties in ||Tz||^p below this resolution are accepted as
# genuinely equal; winning root boxes are refined to POINT_BITS for output.
TIE_RESOLUTION_BITS = 53
POINT_BITS = 60


@dataclass(frozen=True)
class SignedPoly:
    """F restricted to one sign region of the slope line.

    ``region`` is the half-open interval [lo, hi) of validity (closed-left
    convention; None encodes an infinite end), ``signs`` the constant signs
    of (a + b k, c + d k, k) on its interior."""

    coeffs: Tuple[Fraction, ...]
    region: Tuple[Optional[Fraction], Optional[Fraction]]
    signs: Tuple[int, int, int]

    @property
    def degree(self) -> int:
        return len(_poly.trim(self.coeffs)) - 1


@dataclass(frozen=True)
class RootBox:
    """An interval with exactly one real root of the (squarefree) ``poly``.

    lo == hi encodes an exact rational root.  ``multiplicity`` is the
    multiplicity of the root in the full region polynomial; even values are
    kept as candidates (the attainment condition is necessary, not a
    first-order count)."""

    lo: Fraction
    hi: Fraction
    poly: Tuple[int, ...]
    multiplicity: int = 1

    @property
    def multiplicity_free(self) -> bool:
        return self.multiplicity == 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def refined(self, width: Fraction) -> "RootBox":
        lo, hi = _poly.refine_root(self.poly, self.lo, self.hi, width)
        return RootBox(lo, hi, self.poly, self.multiplicity)

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def orth_direction(x, p) -> Vec:
    """The direction w with x ⊥_B w in smooth l_p^2: (-j(x_2), j(x_1)).

    Unique up to scalars by smoothness; exact for rational x and integer p."""
    x = as_vec(x)
    if len(x) != 2:
        raise DomainError("orth_direction works on 2-vectors")
    j = support_coords(x, p)
    return Vec((-j[1], j[0]))


def mt_bound(p) -> int:
    """The cardinality bound 2(8p - 5) for non-isometry-multiple operators."""
    p = Exponent.coerce(p)
    if not (p.is_int and p.value >= 2):
        raise DomainError("the M_T bound is stated for integer p >= 2")
    return 2 * (8 * int(p.value) - 5)


def _j_exact(t: Fraction, q: int) -> Fraction:
    if t == 0:
        return Fraction(0)
    v = abs(t) ** q
    return v if t > 0 else -v


def _require_exact_integer_case(T: Operator2, p) -> Tuple[Exponent, int]:
    p = Exponent.coerce(p)
    if not (p.is_int and p.value >= 2):
        raise DomainError("exact enumeration needs an integer exponent p >= 2")
    if not T.is_exact:
        raise DomainError("exact enumeration needs rational matrix entries")
    return p, int(p.value)


def _f_coeffs(a: Fraction, b: Fraction, c: Fraction, d: Fraction, q: int,
              s1: int, s2: int, s3: int) -> Tuple[Fraction, ...]:
    """Coefficients of s1*(a+bk)^q*(a*s3*k^q - b) + s2*(c+dk)^q*(c*s3*k^q - d)."""
    out = [Fraction(0)] * (2 * q + 2)
    for (u, v, s) in ((a, b, s1), (c, d, s2)):
        if s == 0:
            continue
        for i in range(q + 1):
            binom = math.comb(q, i) * u ** (q - i) * v ** i
            out[i + q] += s * s3 * u * binom
            out[i] -= s * v * binom
    return _poly.trim(out)


def candidate_polynomials(T: Operator2, p) -> List[SignedPoly]:
    """The orthogonality polynomial(s) in the slope k whose real roots carry
    every possible norm-attaining direction with nonzero first coordinate."""
    p, pi = _require_exact_integer_case(T, p)
    if T.is_zero:
        raise DegenerateOperatorError("zero operator")
    if is_isometry_multiple(T, p) is not None:
        raise IsometryMultipleError("M_T = S_X; no finite enumeration exists")
    a, b, c, d = (Fraction(e) for e in T.entries)
    q = pi - 1
    if q % 2 == 1:  # even p: j(t) = t**q globally, one polynomial
        coeffs = _f_coeffs(a, b, c, d, q, 1, 1, 1)
        if not coeffs:
            raise IsometryLikeError("orthogonality polynomial vanished identically")
        return [SignedPoly(coeffs, (None, None), (1, 1, 1))]
    breaks = {Fraction(0)}
    if b != 0:
        breaks.add(-a / b)
    if d != 0:
        breaks.add(-c / d)
    bs = sorted(breaks)
    edges: List[Tuple[Optional[Fraction], Optional[Fraction]]] = []
    edges.append((None, bs[0]))
    for i in range(len(bs) - 1):
        edges.append((bs[i], bs[i + 1]))
    edges.append((bs[-1], None))
    out: List[SignedPoly] = []
    for lo, hi in edges:
        if lo is None:
            sample = bs[0] - 1
        elif hi is None:
            sample = bs[-1] + 1
        else:
            sample = (lo + hi) / 2
        s1 = sign(a + b * sample)
        s2 = sign(c + d * sample)
        s3 = sign(sample)
        coeffs = _f_coeffs(a, b, c, d, q, s1, s2, s3)
        if not coeffs:
            raise IsometryLikeError(
                "orthogonality polynomial vanished identically on a region")
        out.append(SignedPoly(coeffs, (lo, hi), (s1, s2, s3)))
    return out


def isolate_real_roots(poly: SignedPoly) -> List[RootBox]:
    """Exact isolation of the real roots of a SignedPoly inside its region.

    Closed-left convention: a root exactly at the left edge belongs to this
    region, one at the right edge to the next.  Roots of even multiplicity
    are found via the squarefree decomposition and flagged."""
    coeffs = _poly.trim(poly.coeffs)
    if not coeffs:
        raise IsometryLikeError("identically-zero polynomial has a root continuum")
    pint = _poly.from_fractions(coeffs)
    if _poly.degree(pint) < 1:
        return []
    lo, hi = poly.region
    boxes: List[RootBox] = []
    factors = _poly.squarefree_decomposition(pint)
    if lo is not None and _poly.sign_at(pint, lo) == 0:
        for fac, mult in factors:
            if _poly.sign_at(fac, lo) == 0:
                boxes.append(RootBox(lo, lo, fac, mult))
                break
    bound = _poly.cauchy_bound(pint)
    a = lo if lo is not None else -bound
    a = max(a, -bound)
    b = hi if hi is not None else bound
    b = min(b, bound)
    if a < b:
        for fac, mult in factors:
            for (rlo, rhi, work) in _poly.isolate_squarefree(fac, a, b):
                boxes.append(RootBox(rlo, rhi, work, mult))
    boxes.sort(key=lambda bx: (bx.lo, bx.hi))
    return boxes


# ---------------------------------------------------------------------------
# Certified comparison of ||T z(k)||^p over root boxes
# ---------------------------------------------------------------------------


def _abs_pow_range(lo: Fraction, hi: Fraction, p: int) -> Tuple[Fraction, Fraction]:
    """Range of |t|**p over t in [lo, hi]."""
    if lo >= 0:
        return (lo ** p, hi ** p)
    if hi <= 0:
        return ((-hi) ** p, (-lo) ** p)
    return (Fraction(0), max(-lo, hi) ** p)


def _ratio_interval(T: Operator2, pi: int, box: RootBox) -> Tuple[Fraction, Fraction]:
    """Certified interval for ||T z(k)||^p with z(k) the unit vector of slope
    k, over k in the box: (|a+bk|^p + |c+dk|^p) / (1 + |k|^p)."""
    a, b, c, d = (Fraction(e) for e in T.entries)
    klo, khi = box.lo, box.hi
    u1, u2 = a + b * klo, a + b * khi
    v1, v2 = c + d * klo, c + d * khi
    ulo, uhi = _abs_pow_range(min(u1, u2), max(u1, u2), pi)
    vlo, vhi = _abs_pow_range(min(v1, v2), max(v1, v2), pi)
    wlo, whi = _abs_pow_range(min(klo, khi), max(klo, khi), pi)
    return ((ulo + vlo) / (1 + whi), (uhi + vhi) / (1 + wlo))


@dataclass
class _Candidate:
    kind: str  # "slope" | "axis-e2"
    box: Optional[RootBox]
    n_lo: Fraction = Fraction(0)
    n_hi: Fraction = Fraction(0)


def _axis_e2_condition(T: Operator2, pi: int) -> bool:
    """Necessary condition for +-e_2 in M_T: j(b) a + j(d) c = 0."""
    a, b, c, d = (Fraction(e) for e in T.entries)
    return _j_exact(b, pi - 1) * a + _j_exact(d, pi - 1) * c == 0


def mt_exact(T: Operator2, p) -> AttainmentSet:
    """Exact M_T for rational T on l_p^2, integer p >= 2.

    Candidates are the isolated roots of the orthogonality polynomials plus
    +-e_2 when its axis condition holds (+-e_1 arises as the root k = 0).
    ||T z||^p values are compared through refinable rational intervals;
    candidates whose intervals stay tied below 2**-53 are accepted together
    as an exact tie.  The surviving argmax set equals M_T."""
    p, pi = _require_exact_integer_case(T, p)
    if T.is_zero:
        raise DegenerateOperatorError("M_T is about norm attainment of nonzero operators")
    if is_isometry_multiple(T, p) is not None:
        raise IsometryMultipleError("M_T = S_X; represented by the sentinel, not enumerated")

    cands: List[_Candidate] = []
    for sp in candidate_polynomials(T, p):
        for box in isolate_real_roots(sp):
            cands.append(_Candidate("slope", box))
    if _axis_e2_condition(T, pi):
        a, b, c, d = (Fraction(e) for e in T.entries)
        n = abs(b) ** pi + abs(d) ** pi
        cands.append(_Candidate("axis-e2", None, n, n))
    if not cands:
        raise AssertionError("internal: candidate set empty though M_T is nonempty")

    for cand in cands:
        if cand.kind == "slope":
            cand.n_lo, cand.n_hi = _ratio_interval(T, pi, cand.box)

    tie = Fraction(1, 1 << TIE_RESOLUTION_BITS)
    alive = list(cands)
    for _ in range(4 * POINT_BITS):
        best_lo = max(c.n_lo for c in alive)
        alive = [c for c in alive if c.n_hi >= best_lo]
        resolution = tie * max(1, best_lo)
        if all(c.n_hi - c.n_lo <= resolution for c in alive):
            break
        for cand in alive:
            if cand.kind == "slope" and not cand.box.is_exact:
                cand.box = cand.box.refined((cand.box.hi - cand.box.lo) / 2)
                cand.n_lo, cand.n_hi = _ratio_interval(T, pi, cand.box)

    norm_lo = max(c.n_lo for c in alive)
    norm_hi = max(c.n_hi for c in alive)
    target = Fraction(1, 1 << POINT_BITS)
    pts = {}
    for cand in alive:
        if cand.kind == "axis-e2":
            coords = [(0.0, 1.0)]
        else:
            box = cand.box.refined(target)
            k = float(box.midpoint())
            x = (1.0 + abs(k) ** pi) ** (-1.0 / pi)
            coords = [(x, k * x)]
        for (x1, x2) in coords:
            for q in ((x1 + 0.0, x2 + 0.0), (-x1 + 0.0, -x2 + 0.0)):
                key = (round(q[0], 12) + 0.0, round(q[1], 12) + 0.0)
                pts.setdefault(key, Vec(q))
    points = tuple(pts[k] for k in sorted(pts))
    norm_value = (float((norm_lo + norm_hi) / 2)) ** (1.0 / pi)
    return AttainmentSet(norm_value, points, "exact",
                         norm_pow_bounds=(norm_lo, norm_hi))
