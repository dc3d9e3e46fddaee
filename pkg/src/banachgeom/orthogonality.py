"""Birkhoff-James orthogonality, x+/x- cone membership, symmetric points.

x ⊥_B y means ||x + t*y|| >= ||x|| for every real t.  Since the map
t -> ||x + t*y|| is convex, the verdict reduces to a sign condition on the
one-sided derivatives at t = 0: orthogonal iff D-(x;y) <= 0 <= D+(x;y).

On the exact path (rational coordinates, integer or infinite p) every sign
is decided in rational arithmetic.  On the float path |D| <= 1e-9 counts as
zero; the tolerance is configurable per call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Optional

from . import _kernels
from .errors import DomainError
from .space_core import (
    DerivPair,
    Exponent,
    Vec,
    as_vec,
    deriv_pair_l1,
    deriv_pair_linf,
    is_exact_scalar,
    norm_pow,
    one_sided_derivative,
    p_norm,
    sign,
    support_sum,
)

DERIV_ZERO_TOL = 1e-9
BRUTEFORCE_TOL = 1e-7

# Exact near-zero probe offset for the bruteforce oracle: a dip of the convex
# map t -> ||x+ty|| below its value at 0 is always an interval adjacent to 0,
# so probing at +-2**-96 catches any dip wider than 2**-96.
_PROBE_SHIFT = 96


@dataclass(frozen=True)
class OrthVerdict:
    orthogonal: bool
    deriv: DerivPair
    method: str  # "exact" | "derivative" | "bruteforce"


@dataclass(frozen=True)
class SymmetryVerdict:
    status: str  # "holds-on-sample" | "refuted"
    witness: Optional[Vec] = None

    @property
    def refuted(self) -> bool:
        return self.status == "refuted"


def _exact_eligible(x: Vec, y: Vec, p: Exponent) -> bool:
    return x.is_exact and y.is_exact and (p.is_int or p.is_inf)


def _deriv_signs(x: Vec, y: Vec, p: Exponent, tol: float):
    """Signs of (D-, D+) plus the method tag; exact when the inputs allow."""
    if _exact_eligible(x, y, p):
        if p.is_inf:
            lo, hi = deriv_pair_linf(x, y)
            return sign(lo), sign(hi), "exact"
        if p.value == 1:
            lo, hi = deriv_pair_l1(x, y)
            return sign(lo), sign(hi), "exact"
        s = sign(support_sum(x, y, p))
        return s, s, "exact"
    d = one_sided_derivative(x, y, p)
    smin = 0 if abs(d.d_minus) <= tol else sign(d.d_minus)
    splus = 0 if abs(d.d_plus) <= tol else sign(d.d_plus)
    return smin, splus, "derivative"


def bj_orthogonal(x, y, p, tol: float = DERIV_ZERO_TOL) -> OrthVerdict:
    """Decide x ⊥_B y.  Exact for rational inputs with integer or infinite p."""
    x, y = as_vec(x), as_vec(y)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("x = 0 has no Birkhoff-James orthogonality verdicts")
    if y.is_zero:
        method = "exact" if _exact_eligible(x, y, p) else "derivative"
        return OrthVerdict(True, DerivPair(0.0, 0.0), method)
    smin, splus, method = _deriv_signs(x, y, p, tol)
    d = one_sided_derivative(x, y, p)
    return OrthVerdict(smin <= 0 <= splus, d, method)


def in_plus(x, y, p, tol: float = DERIV_ZERO_TOL) -> bool:
    """y ∈ x+, i.e. ||x + t*y|| >= ||x|| for all t >= 0 (iff D+(x;y) >= 0)."""
    x, y = as_vec(x), as_vec(y)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("x = 0 has no cone decomposition")
    if y.is_zero:
        return True
    _, splus, _ = _deriv_signs(x, y, p, tol)
    return splus >= 0


def in_minus(x, y, p, tol: float = DERIV_ZERO_TOL) -> bool:
    """y ∈ x-, i.e. ||x + t*y|| >= ||x|| for all t <= 0 (iff D-(x;y) <= 0)."""
    x, y = as_vec(x), as_vec(y)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("x = 0 has no cone decomposition")
    if y.is_zero:
        return True
    smin, _, _ = _deriv_signs(x, y, p, tol)
    return smin <= 0


# ---------------------------------------------------------------------------
# Grid bruteforce oracle
# ---------------------------------------------------------------------------


def _exact_dip_at(x: Vec, y: Vec, p: Exponent, lam: Fraction) -> bool:
    """Exact test of ||x + lam*y||^p < ||x||^p (max form for p = inf)."""
    shifted = Vec(tuple(xc + lam * yc for xc, yc in zip(x.coords, y.coords)))
    return norm_pow(shifted, p) < norm_pow(x, p)


def bj_bruteforce(x, y, p, lo: float = -10.0, hi: float = 10.0,
                  steps: int = 4001, tol: float = BRUTEFORCE_TOL) -> bool:
    """Grid oracle for x ⊥_B y: min over the lam-grid of ||x + lam*y||,
    refined twice around the minimizer, compared against ||x|| - tol.

    On the exact path the verdict is then confirmed in rational arithmetic:
    a detected dip is re-evaluated exactly at the float minimizer, and a
    clean grid is double-checked with exact probes at lam = +-2**-96 (any
    norm dip of a convex map sits in an interval adjacent to 0, so the
    probes decide every case the float grid cannot see)."""
    x, y = as_vec(x), as_vec(y)
    p = Exponent.coerce(p)
    if not (lo < 0 < hi) or steps < 2:
        raise DomainError("need lo < 0 < hi and steps >= 2")
    if x.is_zero:
        raise DomainError("x = 0 has no Birkhoff-James orthogonality verdicts")
    if y.is_zero:
        return True

    xf = [float(c) for c in x.coords]
    yf = [float(c) for c in y.coords]
    pf = p.as_float()
    nx = p_norm(x, p)

    a, b, n = float(lo), float(hi), int(steps)
    fmin, lam_hat = _kernels.lambda_scan(xf, yf, pf, p.is_inf, a, b, n)
    for _ in range(2):
        h = (b - a) / (n - 1)
        a, b = lam_hat - h, lam_hat + h
        fmin, lam_hat = _kernels.lambda_scan(xf, yf, pf, p.is_inf, a, b, n)

    exact = _exact_eligible(x, y, p)
    if fmin < nx - tol:
        if exact and not _exact_dip_at(x, y, p, Fraction(lam_hat)):
            # Float scan overshot; fall through to the exact probes.
            pass
        else:
            return False
    if exact:
        eps = Fraction(1, 1 << _PROBE_SHIFT)
        if _exact_dip_at(x, y, p, eps) or _exact_dip_at(x, y, p, -eps):
            return False
        return True
    return fmin >= nx - tol


# ---------------------------------------------------------------------------
# Samplers for orthogonal directions
# ---------------------------------------------------------------------------


def random_rational(rng: Random, den_max: int = 32) -> Fraction:
    den = rng.randint(1, den_max)
    return Fraction(rng.randint(-2 * den, 2 * den), den)


def random_rational_vec(rng: Random, n: int, den_max: int = 32) -> Vec:
    while True:
        v = Vec(tuple(random_rational(rng, den_max) for _ in range(n)))
        if not v.is_zero:
            return v


def random_unit_float_vec(rng: Random, n: int, p) -> Vec:
    p = Exponent.coerce(p)
    while True:
        v = Vec(tuple(rng.gauss(0.0, 1.0) for _ in range(n)))
        nrm = p_norm(v, p)
        if nrm > 1e-6:
            return Vec(tuple(c / nrm for c in v.coords))


def random_in_x_perp(x, p, rng: Random, den_max: int = 32) -> Vec:
    """A random y with x ⊥_B y.

    Uses the translation construction: for any draw y0 there is a t with
    x ⊥_B (y0 - t*x), namely any t in [D-(x;y0), D+(x;y0)] / ||x||.  On the
    exact path t is rational (for integer p it is support_sum / norm_pow),
    so the sample is exactly orthogonal.  This covers the whole cone x^perp
    even for p in {1, inf}, where rejection sampling can have zero hit rate.
    """
    x = as_vec(x)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("x = 0 has no orthogonal directions")
    n = len(x)
    exact = x.is_exact and (p.is_int or p.is_inf)
    for _ in range(64):
        if exact:
            y0 = random_rational_vec(rng, n, den_max)
            if p.is_inf:
                dlo, dhi = deriv_pair_linf(x, y0)
                nrm = x.max_abs()
            elif p.value == 1:
                dlo, dhi = deriv_pair_l1(x, y0)
                nrm = norm_pow(x, p)
            else:
                s = support_sum(x, y0, p)
                dlo = dhi = s
                nrm = norm_pow(x, p)  # t = S / ||x||^p
            u = Fraction(rng.randint(0, 16), 16)
            t = (dlo + u * (dhi - dlo)) / nrm
        else:
            y0 = random_unit_float_vec(rng, n, p)
            d = one_sided_derivative(x, y0, p)
            nrm = p_norm(x, p)
            u = rng.random()
            t = (d.d_minus + u * (d.d_plus - d.d_minus)) / nrm
        y = y0.sub(x.scale(t))
        if not y.is_zero:
            return y
    raise RuntimeError("could not sample a nonzero orthogonal direction")


def _axis_index(x: Vec) -> Optional[int]:
    nz = [i for i, c in enumerate(x.coords) if c != 0]
    return nz[0] if len(nz) == 1 else None


def random_orthogonal_to(x, p, rng: Random, den_max: int = 32,
                         tol: float = DERIV_ZERO_TOL) -> Vec:
    """A random y with y ⊥_B x (note the order: x is the second argument).

    For p = 2 orthogonality is symmetric and the x^perp sampler is reused.
    When x lies on a coordinate axis and p is smooth, {y : y ⊥_B x} is the
    exact hyperplane y_i = 0, sampled rationally.  Otherwise y is obtained
    by convex minimization: y = z + lam* x with lam* minimizing ||z + lam*x||
    puts 0 in the subdifferential, i.e. y ⊥_B x; the sample is validated
    against bj_orthogonal and redrawn on a tolerance miss."""
    x = as_vec(x)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("cannot be orthogonal to x = 0")
    n = len(x)
    if p.is_int and p.value == 2:
        return random_in_x_perp(x, p, rng, den_max)
    axis = _axis_index(x)
    if axis is not None and p.smooth():
        for _ in range(64):
            coords = [random_rational(rng, den_max) if x.is_exact else rng.gauss(0.0, 1.0)
                      for _ in range(n)]
            coords[axis] = 0 if x.is_exact else 0.0
            y = Vec(tuple(coords))
            if not y.is_zero:
                return y
        raise RuntimeError("could not sample a nonzero orthogonal vector")
    xf = x.to_float()
    nx = p_norm(xf, p)
    for _ in range(64):
        z = random_unit_float_vec(rng, n, p)
        r = 2.0 * p_norm(z, p) / nx + 1.0
        lo, hi = -r, r
        for _ in range(200):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if p_norm(z.add(xf.scale(m1)), p) < p_norm(z.add(xf.scale(m2)), p):
                hi = m2
            else:
                lo = m1
        y = z.add(xf.scale(0.5 * (lo + hi)))
        if not y.is_zero and bj_orthogonal(y, x, p, tol).orthogonal:
            return y
    raise RuntimeError("could not sample a vector orthogonal to x")


# ---------------------------------------------------------------------------
# Symmetric-point checkers (falsifiers)
# ---------------------------------------------------------------------------


def _confirmed_violation(first, second, p) -> bool:
    """Re-check a candidate witness of NOT(first ⊥_B second).

    Exact verdicts stand on their own.  Float verdicts must either carry a
    clear derivative margin or be confirmed by the grid oracle, so tolerance
    noise near a boundary never produces a spurious refutation."""
    first, second = as_vec(first), as_vec(second)
    p = Exponent.coerce(p)
    v = bj_orthogonal(first, second, p)
    if v.orthogonal:
        return False
    if v.method == "exact":
        return True
    margin = max(v.deriv.d_minus, -v.deriv.d_plus)
    if margin > 1e-7:
        return True
    r = 2.0 * p_norm(first, p) / p_norm(second, p) + 1.0
    return not bj_bruteforce(first, second, p, -r, r, 20001)


def check_left_symmetric(x, p, n: Optional[int] = None, samples: int = 1000,
                         seed: int = 0) -> SymmetryVerdict:
    """Search for y with x ⊥_B y but not y ⊥_B x.

    Falsification only: "holds-on-sample" is evidence, not a certificate.
    A returned witness has been re-validated and is replayable through
    bj_orthogonal / bj_bruteforce."""
    x = as_vec(x)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("x = 0 is not a candidate symmetric point")
    if n is not None and n != len(x):
        raise DomainError(f"n = {n} does not match len(x) = {len(x)}")
    rng = Random(seed)
    for _ in range(samples):
        y = random_in_x_perp(x, p, rng)
        if not bj_orthogonal(x, y, p).orthogonal:
            continue  # float-path tolerance miss in the sampler
        if not bj_orthogonal(y, x, p).orthogonal and _confirmed_violation(y, x, p):
            return SymmetryVerdict("refuted", y)
    return SymmetryVerdict("holds-on-sample")


def check_right_symmetric(x, p, n: Optional[int] = None, samples: int = 1000,
                          seed: int = 0) -> SymmetryVerdict:
    """Search for y with y ⊥_B x but not x ⊥_B y (mirror of the left check)."""
    x = as_vec(x)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("x = 0 is not a candidate symmetric point")
    if n is not None and n != len(x):
        raise DomainError(f"n = {n} does not match len(x) = {len(x)}")
    rng = Random(seed)
    for _ in range(samples):
        y = random_orthogonal_to(x, p, rng)
        if not bj_orthogonal(y, x, p).orthogonal:
            continue
        if not bj_orthogonal(x, y, p).orthogonal and _confirmed_violation(x, y, p):
            return SymmetryVerdict("refuted", y)
    return SymmetryVerdict("holds-on-sample")
