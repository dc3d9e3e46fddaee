import math
from fractions import Fraction as F
from random import Random

import pytest

from banachgeom.errors import DomainError, UnsupportedExponentError
from banachgeom.space_core import (
    INF,
    Exponent,
    Vec,
    deriv_oracle,
    iroot,
    norm_pow,
    one_sided_derivative,
    p_norm,
    p_norm_enclosure,
    support_coords,
)


def test_p_norm_values():
    assert p_norm((3, 4), 2) == 5.0
    assert p_norm((1, 1), "inf") == 1.0
    assert abs(p_norm((1, 1), 3) - 2 ** (1 / 3)) < 1e-15


def test_norm_pow_exact():
    v = Vec((F(1, 2), F(-1, 3)))
    assert norm_pow(v, 3) == F(1, 8) + F(1, 27)
    assert norm_pow(v, INF) == F(1, 2)
    assert isinstance(norm_pow(v.to_float(), 3), float)


def test_non_finite_rejected():
    with pytest.raises(DomainError):
        p_norm((1.0, math.inf), 2)
    with pytest.raises(DomainError):
        Vec((math.nan,))


def test_exponent_flags_and_coercion():
    assert Exponent.integer(2).smooth() and Exponent.integer(2).strictly_convex()
    assert not Exponent.integer(1).smooth()
    assert not INF.smooth()
    assert Exponent.real(2.5).smooth()
    assert Exponent.coerce("inf") is INF
    assert Exponent.coerce(3).is_int
    assert Exponent.coerce(3.0).kind == "real"
    with pytest.raises(DomainError):
        Exponent.coerce(1.0)  # the l_1 path must be the exact integer form
    with pytest.raises(DomainError):
        Exponent.real(0.5)
    with pytest.raises(DomainError):
        Exponent.integer(0)


def test_integer_real_same_norm():
    rng = Random(1)
    for _ in range(200):
        v = Vec(tuple(rng.uniform(-5, 5) for _ in range(3)))
        for q in (2, 3, 5):
            assert abs(p_norm(v, q) - p_norm(v, float(q))) <= 1e-12 * max(1.0, p_norm(v, q))


def test_iroot():
    for n, p in ((0, 3), (1, 5), (7, 2), (8, 3), (10 ** 30, 7)):
        r = iroot(n, p)
        assert r ** p <= n < (r + 1) ** p


def test_p_norm_enclosure():
    v = Vec((F(1), F(1)))
    lo, hi = p_norm_enclosure(v, 3)
    true = 2 ** (1 / 3)
    assert float(lo) <= true <= float(hi)
    assert hi - lo <= F(1, 2 ** 59)
    ilo, ihi = p_norm_enclosure(Vec((F(3), F(-4))), INF)
    assert ilo == ihi == 4
    with pytest.raises(DomainError):
        p_norm_enclosure(Vec((0.5, 0.5)), 3)


def test_one_sided_derivative_examples():
    d = one_sided_derivative((1, 0), (0, 1), 1)
    assert (d.d_minus, d.d_plus) == (-1.0, 1.0)
    d = one_sided_derivative((1, 0), (0, 1), INF)
    assert (d.d_minus, d.d_plus) == (0.0, 0.0)
    d = one_sided_derivative((3, 4), (1, 0), 2)
    assert abs(d.d_minus - 0.6) < 1e-15 and abs(d.d_plus - 0.6) < 1e-15


def test_derivative_edge_cases():
    with pytest.raises(DomainError):
        one_sided_derivative((0, 0), (1, 0), 2)
    d = one_sided_derivative((1, 2), (0, 0), 3)
    assert d.d_minus == d.d_plus == 0.0


def test_support_coords():
    assert support_coords((1, 1), 3).coords == (1, 1)
    assert support_coords((-2, 1), 2).coords == (-2, 1)
    with pytest.raises(UnsupportedExponentError):
        support_coords((1, 1), 1)
    with pytest.raises(UnsupportedExponentError):
        support_coords((1, 1), INF)
    with pytest.raises(DomainError):
        support_coords((0, 0), 3)


def test_support_homogeneity_exact():
    rng = Random(2)
    for p in (2, 3, 4, 5):
        for _ in range(50):
            x = Vec((F(rng.randint(-8, 8), rng.randint(1, 8)),
                     F(rng.randint(-8, 8), rng.randint(1, 8))))
            if x.is_zero:
                continue
            t = F(rng.randint(1, 9), rng.randint(1, 9))
            jx = support_coords(x, p)
            jtx = support_coords(x.scale(t), p)
            assert jtx.coords == tuple(t ** (p - 1) * c for c in jx.coords)


def test_support_consistency_with_derivative():
    rng = Random(3)
    for p in (2, 3, 5, 2.5):
        pe = Exponent.coerce(p)
        for _ in range(100):
            x = Vec(tuple(rng.uniform(-3, 3) for _ in range(3)))
            y = Vec(tuple(rng.uniform(-3, 3) for _ in range(3)))
            if max(abs(c) for c in x.coords) < 1e-3:
                continue
            j = support_coords(x, pe)
            pred = sum(jc * yc for jc, yc in zip(j.coords, y.coords)) / p_norm(x, pe) ** (pe.as_float() - 1)
            d = one_sided_derivative(x, y, pe)
            assert abs(d.d_plus - d.d_minus) <= 1e-12
            assert abs(pred - d.d_plus) <= 1e-12 * max(1.0, abs(pred))


def test_deriv_oracle_examples():
    d = deriv_oracle((1, 0), (0, 1), 2, 1e-6)
    assert abs(d.d_minus) <= 1e-6 and abs(d.d_plus) <= 1e-6
    d = deriv_oracle((1, 0), (1, 0), 2, 1e-6)
    assert abs(d.d_minus - 1) <= 1e-6 and abs(d.d_plus - 1) <= 1e-6


def test_convexity_sandwich():
    rng = Random(4)
    ps = (1, 2, 3, 5, INF, 2.5)
    for _ in range(300):
        n = rng.choice((2, 3, 4))
        x = Vec(tuple(rng.randint(-40, 40) / 4 for _ in range(n)))
        y = Vec(tuple(rng.randint(-40, 40) / 4 for _ in range(n)))
        if x.is_zero:
            continue
        p = rng.choice(ps)
        d = one_sided_derivative(x, y, p)
        assert d.d_minus <= d.d_plus + 1e-12
        o = deriv_oracle(x, y, p, 1e-8)
        assert o.d_minus <= d.d_minus + 1e-6
        assert d.d_plus <= o.d_plus + 1e-6


def test_direction_antisymmetry_and_homogeneity():
    rng = Random(5)
    for p in (1, 2, 3, INF):
        for _ in range(100):
            x = Vec((F(rng.randint(-6, 6)), F(rng.randint(-6, 6)), F(rng.randint(-6, 6))))
            y = Vec((F(rng.randint(-6, 6)), F(rng.randint(-6, 6)), F(rng.randint(-6, 6))))
            if x.is_zero:
                continue
            d = one_sided_derivative(x, y, p)
            dn = one_sided_derivative(x, -y, p)
            assert dn.d_plus == -d.d_minus and dn.d_minus == -d.d_plus
            t = rng.randint(1, 7)
            dt = one_sided_derivative(x, y.scale(t), p)
            assert abs(dt.d_plus - t * d.d_plus) <= 1e-12 * max(1.0, abs(t * d.d_plus))
            assert abs(dt.d_minus - t * d.d_minus) <= 1e-12 * max(1.0, abs(t * d.d_minus))


def test_unit_membership():
    assert Vec((F(1), F(0))).unit(3)
    assert not Vec((F(1), F(1))).unit(3)
    assert Vec((0.6, 0.8)).unit(2)
