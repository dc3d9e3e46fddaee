"""Dense univariate polynomials with exact coefficients: Sturm chains,
squarefree (Yun) decomposition and sign-variation root isolation.

Polynomials are tuples of coefficients in ascending degree order with no
trailing zeros; the zero polynomial is the empty tuple.  Isolation works on
primitive integer polynomials (signs are all that matter), evaluated
homogeneously at rationals so every comparison stays in integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

IPoly = Tuple[int, ...]


def trim(coeffs: Sequence) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p) -> int:
    return len(p) - 1


def from_fractions(coeffs: Sequence[Fraction]) -> IPoly:
    """Clear denominators and divide by the content; preserves signs."""
    cs = trim(coeffs)
    if not cs:
        return ()
    den = math.lcm(*(Fraction(c).denominator for c in cs))
    ints = [int(c * den) for c in cs]
    g = math.gcd(*(abs(c) for c in ints))
    return tuple(c // g for c in ints)


def eval_fraction(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: IPoly, x: Fraction) -> int:
    """Sign of p(x) via homogeneous integer evaluation."""
    if not p:
        return 0
    num, den = x.numerator, x.denominator
    acc = 0
    powd = 1
    for c in reversed(p):
        acc = acc * num + c * powd
        powd *= den
    # acc == p(x) * den**deg, and den > 0, so the signs agree
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


def sign_at_inf(p: IPoly, positive: bool) -> int:
    if not p:
        return 0
    lead = p[-1]
    s = 1 if lead > 0 else -1
    if positive or degree(p) % 2 == 0:
        return s
    return -s


def derivative(p: IPoly) -> IPoly:
    return trim(tuple(i * c for i, c in enumerate(p) if i >= 1))


def _frac_poly(p) -> Tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in p)


def _poly_divmod(a, b):
    """Quotient and remainder over Q."""
    a = list(_frac_poly(trim(a)))
    b = list(_frac_poly(trim(b)))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        coef = a[-1] / b[-1]
        q[k] = coef
        for i, bc in enumerate(b):
            a[i + k] -= coef * bc
        a = list(trim(a))
    return trim(q), trim(a)


def poly_gcd(a, b) -> IPoly:
    """Primitive gcd over Q, returned with positive leading coefficient."""
    a, b = trim(a), trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    g = from_fractions(_frac_poly(a)) if a else ()
    if g and g[-1] < 0:
        g = tuple(-c for c in g)
    return g


def poly_div_exact(a, b) -> IPoly:
    q, r = _poly_divmod(a, b)
    if r:
        raise ArithmeticError("division was not exact")
    return from_fractions(q) if q else ()


def mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(out)


def squarefree_decomposition(p: IPoly) -> List[Tuple[IPoly, int]]:
    """Musser's algorithm: p = const * prod q_i**i with the q_i squarefree and
    pairwise coprime.  Returns [(q_i, i)] for the nonconstant q_i, each
    primitive with positive leading coefficient."""
    p = trim(p)
    if degree(p) < 1:
        return []
    g = poly_gcd(p, derivative(p))
    if degree(g) < 1:
        q = from_fractions(_frac_poly(p))
        if q[-1] < 0:
            q = tuple(-c for c in q)
        return [(q, 1)]
    w = poly_div_exact(p, g)  # squarefree part: every distinct root once
    out: List[Tuple[IPoly, int]] = []
    i = 1
    while degree(w) >= 1:
        y = poly_gcd(w, g)
        a = poly_div_exact(w, y)
        if degree(a) >= 1:
            if a[-1] < 0:
                a = tuple(-c for c in a)
            out.append((a, i))
        w = y
        g = poly_div_exact(g, y)
        i += 1
        if i > 80:
            raise ArithmeticError("squarefree decomposition did not terminate")
    return out


def sturm_chain(p: IPoly) -> List[IPoly]:
    chain = [trim(p), derivative(p)]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        neg = from_fractions(tuple(-Fraction(c) for c in r))
        chain.append(neg)
    if not chain[-1]:
        chain.pop()
    return chain


def _variations(signs: Sequence[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


def variations_at(chain: List[IPoly], x: Optional[Fraction], positive_inf: bool = True) -> int:
    if x is None:
        return _variations([sign_at_inf(q, positive_inf) for q in chain])
    return _variations([sign_at(q, x) for q in chain])


def count_roots_open(chain: List[IPoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the open interval (a, b); requires
    p(a) != 0 and p(b) != 0 (Sturm counts (a, b] and the b endpoint is not a
    root)."""
    return variations_at(chain, a) - variations_at(chain, b)


def cauchy_bound(p: IPoly) -> Fraction:
    """All real roots lie in (-B, B)."""
    p = trim(p)
    if degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    return Fraction(1) + Fraction(m, lead)


def deflate_rational_root(p: IPoly, r: Fraction) -> IPoly:
    """Divide p by (den*x - num) exactly, where r = num/den is a root."""
    lin = (-r.numerator, r.denominator)
    return poly_div_exact(p, lin)


def isolate_squarefree(p: IPoly, lo: Fraction, hi: Fraction) -> List[Tuple[Fraction, Fraction, IPoly]]:
    """Isolating intervals for all real roots of a squarefree p inside the
    open interval (lo, hi), as (lo, hi, poly) triples.

    Exact rational roots come back as degenerate pairs (r, r); the rest as
    open intervals holding exactly one root of ``poly``, which changes sign
    across them.  ``poly`` is the working polynomial after rational roots
    were deflated, so its endpoint signs are nonzero and bisection
    refinement is safe."""
    p = trim(p)
    if degree(p) < 1:
        return []
    out: List[Tuple[Fraction, Fraction, IPoly]] = []
    # Pull out rational roots at the natural probe points so the recursion
    # below can assume non-root endpoints.
    for probe in (Fraction(0),):
        if lo < probe < hi and sign_at(p, probe) == 0:
            out.append((probe, probe, p))
            p = deflate_rational_root(p, probe)
    if sign_at(p, lo) == 0:
        p = deflate_rational_root(p, lo)
    if sign_at(p, hi) == 0:
        p = deflate_rational_root(p, hi)
    if degree(p) < 1:
        return sorted(out, key=lambda item: (item[0], item[1]))
    chain = sturm_chain(p)
    stack = [(lo, hi, variations_at(chain, lo), variations_at(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n <= 0:
            continue
        if n == 1:
            out.append((a, b, p))
            continue
        m = (a + b) / 2
        sm = sign_at(p, m)
        if sm == 0:
            out.append((m, m, p))
            p2 = deflate_rational_root(p, m)
            # Restart on both halves with the deflated polynomial; cheap at
            # the degrees (<= 2p-2) this module sees.
            out.extend(isolate_squarefree(p2, a, m))
            out.extend(isolate_squarefree(p2, m, b))
            continue
        vm = variations_at(chain, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    return sorted(out, key=lambda item: (item[0], item[1]))


def refine_root(p: IPoly, lo: Fraction, hi: Fraction, width: Fraction) -> Tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a squarefree p to the requested width
    by sign bisection.  Degenerate input (exact root) is returned as is."""
    if lo == hi:
        return (lo, hi)
    slo = sign_at(p, lo)
    if slo == 0:
        return (lo, lo)
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = sign_at(p, m)
        if sm == 0:
            return (m, m)
        if sm == slo:
            lo = m
        else:
            hi = m
    return (lo, hi)
