"""Norms, one-sided norm derivatives and support-functional coordinates on l_p^n.

Scalars are either exact (``int`` / ``fractions.Fraction``) or ``float``.
Exactness is tracked per vector: any float coordinate puts the vector on the
float path.  Exponents carry an exact-integer fast path so that sign
decisions (orthogonality verdicts, support sums) can be made in rational
arithmetic whenever the inputs allow it.

Conventions used throughout:

* ``j(t) = sign(t) * |t|**(p-1)`` is the support-functional coordinate map;
  for a unit vector x of smooth l_p the functional ``y -> sum(j(x)_i * y_i)``
  norms x.
* ``D-(x;y) <= D+(x;y)`` are the one-sided derivatives of
  ``t -> ||x + t*y||`` at ``t = 0``; the map is convex in t, which makes the
  pair well defined for every p in [1, inf].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DomainError, UnsupportedExponentError

Scalar = Union[int, Fraction, float]

# Relative tolerance used on the float path to decide "coordinate is zero"
# (p = 1) and "coordinate attains the max" (p = inf).  The exact path never
# uses it.
ZERO_REL_TOL = 1e-12

# Default tolerance for float-path norm comparisons.
NORM_REL_TOL = 1e-9


def is_exact_scalar(s: Scalar) -> bool:
    return isinstance(s, (int, Fraction)) and not isinstance(s, bool)


def _require_finite(s: Scalar) -> None:
    if isinstance(s, float) and not math.isfinite(s):
        raise DomainError(f"non-finite coordinate {s!r}")


def sign(s: Scalar) -> int:
    if s > 0:
        return 1
    if s < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# Exponent
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Exponent:
    """The p of an l_p norm: Integer(q >= 1), Real(r > 1) or Infinity.

    ``Integer(q)`` and ``Real(float(q))`` denote the same norm; the integer
    form unlocks exact rational arithmetic.  p = 1 is only representable as
    ``Integer(1)``.
    """

    kind: str  # "int" | "real" | "inf"
    value: float

    def __post_init__(self):
        if self.kind == "int":
            if not isinstance(self.value, int) or self.value < 1:
                raise DomainError(f"integer exponent must be an int >= 1, got {self.value!r}")
        elif self.kind == "real":
            if not (isinstance(self.value, float) and math.isfinite(self.value) and self.value > 1):
                raise DomainError(f"real exponent must be a finite float > 1, got {self.value!r}")
        elif self.kind == "inf":
            if self.value != math.inf:
                raise DomainError("infinity exponent must carry math.inf")
        else:
            raise DomainError(f"unknown exponent kind {self.kind!r}")

    @classmethod
    def integer(cls, q: int) -> "Exponent":
        return cls("int", int(q))

    @classmethod
    def real(cls, r: float) -> "Exponent":
        return cls("real", float(r))

    @classmethod
    def coerce(cls, p) -> "Exponent":
        """Accept Exponent | int | float | 'inf' | math.inf."""
        if isinstance(p, Exponent):
            return p
        if isinstance(p, bool):
            raise DomainError("bool is not an exponent")
        if isinstance(p, int):
            return cls.integer(p)
        if isinstance(p, float):
            if math.isinf(p):
                return INF
            if p == 1.0:
                raise DomainError("p = 1.0 must be passed as the integer 1 (exact l_1 path)")
            return cls.real(p)
        if isinstance(p, str) and p.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        raise DomainError(f"cannot interpret {p!r} as an exponent")

    @property
    def is_int(self) -> bool:
        return self.kind == "int"

    @property
    def is_inf(self) -> bool:
        return self.kind == "inf"

    def as_float(self) -> float:
        return float(self.value)

    def smooth(self) -> bool:
        """True iff l_p is smooth, i.e. 1 < p < inf."""
        if self.kind == "inf":
            return False
        if self.kind == "int":
            return self.value >= 2
        return True

    def strictly_convex(self) -> bool:
        return self.smooth()

    def __repr__(self) -> str:
        if self.kind == "inf":
            return "Exponent(inf)"
        if self.kind == "int":
            return f"Exponent(int {self.value})"
        return f"Exponent(real {self.value})"


INF = Exponent("inf", math.inf)


# ---------------------------------------------------------------------------
# Vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Vec:
    """A point of l_p^n with exact-rational or float coordinates."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) < 1:
            raise DomainError("vector needs at least one coordinate")
        for c in self.coords:
            _require_finite(c)

    @classmethod
    def of(cls, *coords: Scalar) -> "Vec":
        return cls(tuple(coords))

    @property
    def is_exact(self) -> bool:
        return all(is_exact_scalar(c) for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __neg__(self) -> "Vec":
        return Vec(tuple(-c for c in self.coords))

    def scale(self, t: Scalar) -> "Vec":
        return Vec(tuple(t * c for c in self.coords))

    def add(self, other: "Vec") -> "Vec":
        return Vec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def sub(self, other: "Vec") -> "Vec":
        return Vec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def to_float(self) -> "Vec":
        return Vec(tuple(float(c) for c in self.coords))

    def max_abs(self) -> Scalar:
        return max(abs(c) for c in self.coords)

    def unit(self, p, tol: float = NORM_REL_TOL) -> bool:
        """Membership in the unit sphere S_X; exact equality on the exact path."""
        p = Exponent.coerce(p)
        if self.is_exact and (p.is_int or p.is_inf):
            return norm_pow(self, p) == 1
        return abs(p_norm(self, p) - 1.0) <= tol


def as_vec(v) -> Vec:
    if isinstance(v, Vec):
        return v
    return Vec(tuple(v))


def basis_vec(n: int, i: int) -> Vec:
    return Vec(tuple(1 if k == i else 0 for k in range(n)))


# ---------------------------------------------------------------------------
# Norms
# ---------------------------------------------------------------------------


def norm_pow(v, p) -> Scalar:
    """Comparison form of the norm: sum |v_i|^p for finite p, max |v_i| for
    p = inf.  Exact (int/Fraction) whenever the inputs are exact and p is an
    integer or inf; float otherwise."""
    v = as_vec(v)
    p = Exponent.coerce(p)
    if p.is_inf:
        return v.max_abs()
    if p.is_int and v.is_exact:
        q = int(p.value)
        return sum(abs(c) ** q for c in v.coords)
    pf = p.as_float()
    return float(sum(abs(float(c)) ** pf for c in v.coords))


def p_norm(v, p) -> float:
    """(sum |v_i|^p)^(1/p) for p < inf, max |v_i| for p = inf, as a float.

    For certified exact comparisons use :func:`norm_pow` (rational) or
    :func:`p_norm_enclosure` (rational interval around the possibly
    irrational norm)."""
    v = as_vec(v)
    p = Exponent.coerce(p)
    if p.is_inf:
        return float(v.max_abs())
    npow = norm_pow(v, p)
    if npow == 0:
        return 0.0
    return float(npow) ** (1.0 / p.as_float())


def iroot(n: int, p: int) -> int:
    """Floor integer p-th root of n >= 0."""
    if n < 0:
        raise DomainError("iroot needs n >= 0")
    if n == 0:
        return 0
    if p == 1:
        return n
    if p == 2:
        return math.isqrt(n)
    x = 1 << (-(-n.bit_length() // p))  # >= true root
    while True:
        y = ((p - 1) * x + n // x ** (p - 1)) // p
        if y >= x:
            break
        x = y
    while x ** p > n:
        x -= 1
    return x


def p_norm_enclosure(v, p, bits: int = 60):
    """Certified rational enclosure (lo, hi) of ||v||_p on the exact path,
    with hi - lo <= 2**(1-bits).  Requires exact coordinates and integer p
    (or p = inf, where the norm itself is rational)."""
    v = as_vec(v)
    p = Exponent.coerce(p)
    if not v.is_exact:
        raise DomainError("p_norm_enclosure needs exact coordinates")
    if p.is_inf:
        m = Fraction(v.max_abs())
        return (m, m)
    if not p.is_int:
        raise DomainError("p_norm_enclosure needs an integer exponent")
    q = int(p.value)
    npow = Fraction(norm_pow(v, p))
    if npow == 0:
        return (Fraction(0), Fraction(0))
    scale = 1 << bits
    a, b = npow.numerator, npow.denominator
    m = iroot(a * scale**q // b, q)
    lo = Fraction(m, scale)
    hi = Fraction(m + 2, scale)
    return (lo, hi)


# ---------------------------------------------------------------------------
# One-sided derivatives
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DerivPair:
    """One-sided derivatives of t -> ||x + t*y|| at t = 0.

    Convexity forces d_minus <= d_plus; for smooth p the two coincide.
    """

    d_minus: float
    d_plus: float


def _j_coord(c: Scalar, q) -> Scalar:
    """sign(c) * |c|**q.  Exact for integer q and exact c."""
    if isinstance(q, int):
        if c == 0:
            return 0 if is_exact_scalar(c) else 0.0
        v = abs(c) ** q
        return v if c > 0 else -v
    cf = float(c)
    if cf == 0.0:
        return 0.0
    return math.copysign(abs(cf) ** q, cf)


def support_sum(x: Vec, y: Vec, p: Exponent) -> Scalar:
    """sum_i j(x)_i * y_i with j(t) = sign(t)|t|^(p-1).

    Up to the positive factor ||x||^(1-p) this is the (two-sided) derivative
    of the norm along y for smooth p; its sign decides orthogonality.  Exact
    when x, y are exact and p is an integer."""
    q = int(p.value) - 1 if p.is_int else p.as_float() - 1.0
    if isinstance(q, int) and x.is_exact and y.is_exact:
        return sum(_j_coord(xc, q) * yc for xc, yc in zip(x.coords, y.coords))
    qf = float(q)
    return float(sum(_j_coord(float(xc), qf) * float(yc) for xc, yc in zip(x.coords, y.coords)))


def deriv_pair_l1(x: Vec, y: Vec):
    """(D-, D+) on l_1: sum over nonzero x_i of sign(x_i) y_i, -/+ the mass of
    |y_i| on the zero set of x.  Exact scalars when the inputs are exact."""
    exact = x.is_exact and y.is_exact
    if exact:
        base = sum(sign(xc) * yc for xc, yc in zip(x.coords, y.coords) if xc != 0)
        spread = sum(abs(yc) for xc, yc in zip(x.coords, y.coords) if xc == 0)
    else:
        cutoff = ZERO_REL_TOL * float(x.max_abs())
        base = 0.0
        spread = 0.0
        for xc, yc in zip(x.coords, y.coords):
            xf, yf = float(xc), float(yc)
            if abs(xf) <= cutoff:
                spread += abs(yf)
            else:
                base += math.copysign(1.0, xf) * yf
    return (base - spread, base + spread)


def deriv_pair_linf(x: Vec, y: Vec):
    """(D-, D+) on l_inf: min / max of sign(x_i) y_i over the coordinates
    where |x_i| attains the max norm."""
    exact = x.is_exact and y.is_exact
    m = x.max_abs()
    if exact:
        active = [i for i, xc in enumerate(x.coords) if abs(xc) == m]
    else:
        cutoff = ZERO_REL_TOL * float(m)
        active = [i for i, xc in enumerate(x.coords) if float(m) - abs(float(xc)) <= cutoff]
    vals = [sign(x.coords[i]) * y.coords[i] if exact else math.copysign(1.0, float(x.coords[i])) * float(y.coords[i]) for i in active]
    return (min(vals), max(vals))


def one_sided_derivative(x, y, p) -> DerivPair:
    """D+-(x;y) = lim_{t->0+-} (||x+ty|| - ||x||)/t as a float pair.

    For 1 < p < inf both sides equal ||x||^(1-p) * support_sum(x, y, p);
    for p = 1 and p = inf the standard subdifferential formulas are used.
    Exact rational sign decisions live in :mod:`banachgeom.orthogonality`,
    which calls the exact helpers directly."""
    x, y = as_vec(x), as_vec(y)
    p = Exponent.coerce(p)
    if x.is_zero:
        raise DomainError("one-sided derivative undefined at x = 0")
    if len(x) != len(y):
        raise DomainError("dimension mismatch")
    if p.is_inf:
        lo, hi = deriv_pair_linf(x, y)
        return DerivPair(float(lo), float(hi))
    if p.is_int and p.value == 1:
        lo, hi = deriv_pair_l1(x, y)
        return DerivPair(float(lo), float(hi))
    nrm = p_norm(x, p)
    s = float(support_sum(x, y, p))
    d = s / nrm ** (p.as_float() - 1.0)
    return DerivPair(d, d)


def support_coords(x, p) -> Vec:
    """j(x) with j(x)_i = sign(x_i)|x_i|^(p-1); the coordinates of the norming
    functional direction at x for smooth p.  x ⊥_B y iff sum j(x)_i y_i = 0."""
    x = as_vec(x)
    p = Exponent.coerce(p)
    if p.is_inf or (p.is_int and p.value == 1):
        raise UnsupportedExponentError("support_coords needs 1 < p < inf; use one_sided_derivative")
    if x.is_zero:
        raise DomainError("support_coords undefined at x = 0")
    q = int(p.value) - 1 if (p.is_int and x.is_exact) else p.as_float() - 1.0
    return Vec(tuple(_j_coord(c if isinstance(q, int) else float(c), q) for c in x.coords))


def deriv_oracle(x, y, p, h: float = 1e-8) -> DerivPair:
    """Finite-difference bracket ((f(0)-f(-h))/h, (f(h)-f(0))/h) around the
    true derivative pair; by convexity it sandwiches one_sided_derivative
    for every h > 0."""
    x, y = as_vec(x).to_float(), as_vec(y).to_float()
    p = Exponent.coerce(p)
    if h <= 0:
        raise DomainError("h must be positive")
    if x.is_zero:
        raise DomainError("derivative oracle undefined at x = 0")
    f0 = p_norm(x, p)
    fp = p_norm(x.add(y.scale(h)), p)
    fm = p_norm(x.sub(y.scale(h)), p)
    return DerivPair((f0 - fm) / h, (fp - f0) / h)
