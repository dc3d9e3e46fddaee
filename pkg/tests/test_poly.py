from fractions import Fraction as F
from random import Random

import numpy as np

from banachgeom import _poly


def test_from_fractions_primitive():
    assert _poly.from_fractions((F(1, 2), F(1, 3))) == (3, 2)
    assert _poly.from_fractions((F(0), F(0))) == ()
    assert _poly.from_fractions((F(-2), F(4))) == (-1, 2)


def test_sign_at_matches_fraction_eval():
    rng = Random(0)
    for _ in range(200):
        p = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 7)))
        p = _poly.trim(p)
        if not p:
            continue
        x = F(rng.randint(-30, 30), rng.randint(1, 12))
        val = _poly.eval_fraction(p, x)
        s = 0 if val == 0 else (1 if val > 0 else -1)
        assert _poly.sign_at(p, x) == s


def test_gcd_and_division():
    a = _poly.mul((1, 1), (-2, 1))      # (x+1)(x-2)
    b = _poly.mul((1, 1), (3, 1))       # (x+1)(x+3)
    g = _poly.poly_gcd(a, b)
    assert g == (1, 1)
    assert _poly.poly_div_exact(a, g) == (-2, 1)


def test_squarefree_decomposition():
    # x^2 (x-1)^3 (x+2)
    p = (1,)
    for fac, mult in (((0, 1), 2), ((-1, 1), 3), ((2, 1), 1)):
        for _ in range(mult):
            p = _poly.mul(p, fac)
    dec = _poly.squarefree_decomposition(p)
    got = {mult: fac for fac, mult in dec}
    assert got[2] == (0, 1)
    assert got[3] == (-1, 1)
    assert got[1] == (2, 1)


def test_isolation_simple():
    # x^2 - 2 inside (-3, 3)
    boxes = _poly.isolate_squarefree((-2, 0, 1), F(-3), F(3))
    assert len(boxes) == 2
    vals = sorted((float(lo) + float(hi)) / 2 for lo, hi, _ in boxes)
    assert abs(vals[0] + 2 ** 0.5) < 1.6
    assert abs(vals[1] - 2 ** 0.5) < 1.6
    for lo, hi, work in boxes:
        lo2, hi2 = _poly.refine_root(work, lo, hi, F(1, 2 ** 50))
        mid = (float(lo2) + float(hi2)) / 2
        assert abs(abs(mid) - 2 ** 0.5) < 1e-14


def test_isolation_exact_rational_roots():
    # 6x^5 - 6x = 6x(x-1)(x+1)(x^2+1): roots 0, 1, -1
    p = (0, -6, 0, 0, 0, 6)
    dec = _poly.squarefree_decomposition(p)
    assert len(dec) == 1 and dec[0][1] == 1
    boxes = _poly.isolate_squarefree(dec[0][0], F(-2), F(2))
    roots = set()
    for lo, hi, work in boxes:
        lo, hi = _poly.refine_root(work, lo, hi, F(1, 2 ** 40))
        roots.add(round((float(lo) + float(hi)) / 2, 9))
    assert roots == {-1.0, 0.0, 1.0}


def test_isolation_against_numpy_roots():
    rng = Random(1)
    trials = 0
    while trials < 120:
        deg = rng.randint(2, 8)
        coeffs = [rng.randint(-6, 6) for _ in range(deg + 1)]
        p = _poly.trim(coeffs)
        if _poly.degree(p) < 2:
            continue
        dec = _poly.squarefree_decomposition(p)
        if any(m > 1 for _, m in dec):
            continue  # oracle comparison needs clean simple roots
        rts = np.roots(list(reversed(p)))
        real = [r.real for r in rts if abs(r.imag) < 1e-9]
        if any(abs(r.imag) < 1e-3 and abs(r.imag) >= 1e-9 for r in rts):
            continue  # borderline-complex pair: numpy's call is unreliable
        trials += 1
        bound = _poly.cauchy_bound(p)
        boxes = _poly.isolate_squarefree(p, -bound, bound)
        assert len(boxes) == len(real)
        mids = []
        for lo, hi, work in boxes:
            lo, hi = _poly.refine_root(work, lo, hi, F(1, 2 ** 48))
            mids.append((float(lo) + float(hi)) / 2)
        for got, want in zip(sorted(mids), sorted(real)):
            assert abs(got - want) < 1e-6


def test_cauchy_bound_contains_roots():
    p = (-10, 0, 0, 1)  # x^3 = 10
    b = _poly.cauchy_bound(p)
    assert float(b) > 10 ** (1 / 3)
