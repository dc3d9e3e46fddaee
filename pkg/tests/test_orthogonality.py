from fractions import Fraction as F
from random import Random

import pytest

from banachgeom.errors import DomainError
from banachgeom.orthogonality import (
    bj_bruteforce,
    bj_orthogonal,
    check_left_symmetric,
    check_right_symmetric,
    in_minus,
    in_plus,
    random_in_x_perp,
    random_orthogonal_to,
    random_rational_vec,
)
from banachgeom.space_core import INF, Vec, p_norm, support_coords

from oracles import grid_min_norm_along


def test_paper_linf_examples():
    # (1,1) ⊥_B (-1/2, 1) on l_inf^2
    v = bj_orthogonal((1, 1), (F(-1, 2), 1), INF)
    assert v.orthogonal and v.method == "exact"
    # (1,0)^perp on l_inf^2 contains every (0, beta)
    for beta in (F(1), F(-7, 3), F(0), 2.5):
        assert bj_orthogonal((1, 0), (0, beta), INF).orthogonal


def test_smooth_support_sum_example():
    v = bj_orthogonal((1, 1), (-1, 1), 3)
    assert v.orthogonal and v.method == "exact"
    assert not bj_orthogonal((1, 1), (1, 1), 3).orthogonal


def test_zero_vector_rules():
    with pytest.raises(DomainError):
        bj_orthogonal((0, 0), (1, 0), 2)
    assert bj_orthogonal((1, 0), (0, 0), 2).orthogonal


def test_bruteforce_examples():
    assert bj_bruteforce((1, 0), (0, 1), 2, -10, 10, 10001)
    assert not bj_bruteforce((1, 0), (1, 0), 2, -10, 10, 10001)
    with pytest.raises(DomainError):
        bj_bruteforce((1, 0), (0, 1), 2, 1.0, 10.0, 100)


def test_bruteforce_matches_grid_oracle():
    rng = Random(0)
    for _ in range(40):
        x = [rng.randint(-8, 8) / 4 for _ in range(2)]
        y = [rng.randint(-8, 8) / 4 for _ in range(2)]
        if not any(x) or not any(y):
            continue
        got = bj_bruteforce(Vec(tuple(map(F, map(int, [v * 4 for v in x])))), Vec(tuple(map(F, map(int, [v * 4 for v in y])))), 2, -20, 20, 4001)
        ref = grid_min_norm_along(x, y, 2, -20, 20, 20001) >= p_norm(x, 2) - 1e-7
        assert got == ref


def test_cones_basics():
    x = Vec((F(2), F(1)))
    assert in_plus(x, x, 3) and not in_minus(x, x, 3)
    assert in_plus(x, Vec((F(0), F(0))), 3) and in_minus(x, Vec((F(0), F(0))), 3)


def test_cone_conjunction_is_orthogonality():
    rng = Random(1)
    for p in (1, 2, 3, INF):
        for _ in range(150):
            x = random_rational_vec(rng, 3, 8)
            y = random_rational_vec(rng, 3, 8)
            both = in_plus(x, y, p) and in_minus(x, y, p)
            assert both == bj_orthogonal(x, y, p).orthogonal


def test_cone_totality_and_sign_flip():
    rng = Random(2)
    for p in (1, 2, 3, 5, INF):
        for _ in range(150):
            x = random_rational_vec(rng, 2, 8)
            y = random_rational_vec(rng, 2, 8)
            assert in_plus(x, y, p) or in_minus(x, y, p)
            assert in_plus(x, y, p) == in_minus(x, -y, p)


def test_homogeneity_exact_path():
    rng = Random(3)
    for p in (1, 2, 3, INF):
        for _ in range(100):
            x = random_rational_vec(rng, 2, 6)
            y = random_rational_vec(rng, 2, 6)
            base = bj_orthogonal(x, y, p).orthogonal
            alpha = F(rng.choice((-3, -1, 2, 5)), rng.randint(1, 4))
            beta = F(rng.choice((-2, -1, 1, 7)), rng.randint(1, 5))
            assert bj_orthogonal(x.scale(alpha), y.scale(beta), p).orthogonal == base


def _ordered_sphere_loop(p: float, n: int):
    """A continuous closed walk around the l_p^2 unit sphere."""
    ts = [-1.0 + 2.0 * i / (n - 1) for i in range(n)]
    right = [((1 - abs(t) ** p) ** (1 / p) if abs(t) < 1 else 0.0, t) for t in ts]
    left = [(-z1, z2) for (z1, z2) in reversed(right)]
    return right + left


def test_smooth_uniqueness_two_antipodal_solutions():
    # On smooth l_p^2 the unit solutions of x ⊥_B y form one antipodal pair:
    # the support sum changes sign exactly twice along the full sphere loop.
    rng = Random(4)
    for p in (2, 3, 5):
        for _ in range(20):
            x = random_rational_vec(rng, 2, 8).to_float()
            j = support_coords(x, p)
            flips = 0
            prev = None
            for (z1, z2) in _ordered_sphere_loop(float(p), 500):
                s = j[0] * z1 + j[1] * z2
                if s == 0:
                    continue
                cur = s > 0
                if prev is not None and cur != prev:
                    flips += 1
                prev = cur
            assert flips == 2


def test_random_in_x_perp_is_exactly_orthogonal():
    rng = Random(5)
    for p in (1, 2, 3, 5, INF):
        for _ in range(60):
            x = random_rational_vec(rng, 3, 8)
            y = random_in_x_perp(x, p, rng)
            v = bj_orthogonal(x, y, p)
            assert v.orthogonal and v.method == "exact"


def test_random_orthogonal_to_validates():
    rng = Random(6)
    for p in (2, 3, 5):
        for _ in range(40):
            x = random_rational_vec(rng, 2, 8)
            y = random_orthogonal_to(x, p, rng)
            assert bj_orthogonal(y, x, p).orthogonal


def test_left_symmetric_diagonal_and_euclidean():
    scale = 2 ** (-1 / 3)
    assert not check_left_symmetric((scale, scale), 3, samples=200, seed=0).refuted
    assert not check_left_symmetric((1, 0), 2, samples=200, seed=0).refuted
    assert not check_left_symmetric((0.6, 0.8), 2, samples=200, seed=0).refuted


def test_left_symmetric_refuted_on_linf():
    # x = (1,1) on l_inf^2: y = (-1/2, 1) lies in x^perp but y is not
    # orthogonal to x (norm drops at lambda = -1/4).
    y = Vec((F(-1, 2), F(1)))
    x = Vec((F(1), F(1)))
    assert bj_orthogonal(x, y, INF).orthogonal
    assert not bj_orthogonal(y, x, INF).orthogonal
    shifted = y.add(x.scale(F(-1, 4)))
    assert shifted.coords == (F(-3, 4), F(3, 4))
    assert max(abs(c) for c in shifted.coords) == F(3, 4) < 1
    verdict = check_left_symmetric(x, INF, samples=500, seed=1)
    assert verdict.refuted
    w = verdict.witness
    assert bj_orthogonal(x, w, INF).orthogonal
    assert not bj_orthogonal(w, x, INF).orthogonal


def test_generic_point_not_left_symmetric_for_p3():
    # (1, 1/2) on l_3^2: the unique orthogonal direction fails to reverse.
    verdict = check_left_symmetric((1, F(1, 2)), 3, samples=50, seed=2)
    assert verdict.refuted


def test_right_symmetric_basis_vectors():
    assert not check_right_symmetric((1, 0), 3, samples=300, seed=0).refuted
    assert not check_right_symmetric((1, 0), 2, samples=300, seed=0).refuted


def test_right_symmetric_linf_worked_sample():
    # The specific sample y = (1,-1) for x = (1,1) on l_inf^2 passes both
    # directions, so it alone cannot refute; the checker must keep sampling.
    x, y = Vec((1, 1)), Vec((1, -1))
    assert bj_orthogonal(y, x, INF).orthogonal
    assert bj_orthogonal(x, y, INF).orthogonal
    verdict = check_right_symmetric(x, INF, samples=40, seed=3)
    if verdict.refuted:
        w = verdict.witness
        assert bj_orthogonal(w, x, INF).orthogonal
        assert not bj_orthogonal(x, w, INF).orthogonal


def test_dimension_argument_checked():
    with pytest.raises(DomainError):
        check_left_symmetric((1, 0), 2, n=3, samples=5, seed=0)
