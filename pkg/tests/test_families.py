"""Game constructors: formulas, ranks, and structure-preserving rewrites."""

import random
from fractions import Fraction

import numpy as np
import pytest

from rankgames import (
    BimatrixGame,
    FamilySpec,
    additive_to_zero_sum,
    block_game,
    build_family,
    enumerate_by_supports,
    find_additive_decomposition,
    fraction_matrix,
    identity_game,
    matrix_rank,
    polynomial_kernel_game,
    polynomial_kernel_matrix,
    rank1_family,
    squared_difference_family,
)

from helpers import random_matrix


def test_rank1_family_formula():
    g = rank1_family(3)
    for i in range(1, 4):
        for j in range(1, 4):
            assert g.a[i - 1, j - 1] == 2 * i * j - i * i + j * j
            assert g.c[i - 1, j - 1] == 4 * i * j
    assert np.array_equal(g.b, g.a.T)
    assert g.rank_c == 1
    assert g.norm_c == 36
    with pytest.raises(ValueError):
        rank1_family(0)


def test_squared_difference_family_formula_and_rank():
    g = squared_difference_family(4)
    for i in range(4):
        for j in range(4):
            assert g.a[i, j] == -((i - j) ** 2)
    assert np.array_equal(g.a, g.b)
    assert squared_difference_family(2).rank_c == 2
    for d in (3, 4, 5):
        assert squared_difference_family(d).rank_c == 3


def test_squared_difference_same_equilibria_as_rank1():
    # payoff columns differ from rank1's only by column-constant shifts
    for d in (2, 3, 4):
        s1 = set(enumerate_by_supports(rank1_family(d)))
        s2 = set(enumerate_by_supports(squared_difference_family(d)))
        assert s1 == s2
        assert len(s1) == 2 * d - 1


def test_identity_game():
    g = identity_game(3)
    assert g.rank_c == 3
    assert g.norm_c == 2
    assert g.a[0, 0] == 1 and g.a[0, 1] == 0
    assert np.array_equal(g.a, g.b)


def test_block_game_layout_and_rank():
    g = block_game(identity_game(2), rank1_family(2))
    assert g.shape == (4, 4)
    assert np.array_equal(g.a[:2, :2], identity_game(2).a)
    assert np.array_equal(g.a[2:, 2:], rank1_family(2).a)
    assert all(e == 0 for e in g.a[:2, 2:].flat)
    assert all(e == 0 for e in g.b[2:, :2].flat)
    assert g.rank_c == identity_game(2).rank_c + rank1_family(2).rank_c
    with pytest.raises(ValueError):
        block_game(BimatrixGame([[1, 2]], [[0, 0]]), identity_game(2))


def test_polynomial_kernel_matches_squared_difference():
    for d in (2, 3, 5):
        mat = polynomial_kernel_matrix(range(1, d + 1), (0, 0, -1))
        assert np.array_equal(mat, squared_difference_family(d).a)
    game = polynomial_kernel_game(range(1, 4), (0, 0, -1))
    assert game == squared_difference_family(3)


def test_polynomial_kernel_rank_bound():
    # p(g_i - g_j) of degree p has rank at most (deg+1)(deg+2)/2
    rng = random.Random(31415)
    for _ in range(20):
        d = rng.randint(2, 6)
        deg = rng.randint(0, 3)
        grid = [Fraction(rng.randint(-6, 6)) for _ in range(d)]
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(deg)]
        coeffs.append(Fraction(rng.choice([-2, -1, 1, 2])))
        mat = polynomial_kernel_matrix(grid, coeffs)
        assert matrix_rank(mat) <= (deg + 1) * (deg + 2) // 2
    with pytest.raises(ValueError):
        polynomial_kernel_matrix([], [1])
    with pytest.raises(ValueError):
        polynomial_kernel_matrix([1, 2], [])


def test_additive_to_zero_sum_preserves_equilibria():
    rng = random.Random(2718)
    for _ in range(10):
        m, n = rng.randint(2, 3), rng.randint(2, 3)
        u = [rng.randint(-4, 4) for _ in range(m)]
        v = [rng.randint(-4, 4) for _ in range(n)]
        a = random_matrix(rng, m, n, -6, 6)
        b = [[u[i] + v[j] - a[i][j] for j in range(n)] for i in range(m)]
        g = BimatrixGame(a, b)
        z = additive_to_zero_sum(g, u, v)
        assert z.norm_c == 0
        assert set(enumerate_by_supports(g)) == set(enumerate_by_supports(z))


def test_additive_to_zero_sum_rejects_bad_split():
    g = rank1_family(2)  # c = 4ij is not additively separable
    with pytest.raises(ValueError):
        additive_to_zero_sum(g, [4, 8], [0, 8])
    with pytest.raises(ValueError):
        additive_to_zero_sum(g, [4], [0, 8])


def test_find_additive_decomposition():
    rng = random.Random(161803)
    for _ in range(10):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        u = [Fraction(rng.randint(-5, 5)) for _ in range(m)]
        v = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        mat = fraction_matrix([[u[i] + v[j] for j in range(n)] for i in range(m)])
        got = find_additive_decomposition(mat)
        assert got is not None
        gu, gv = got
        assert gu[0] == 0  # normalization
        rebuilt = fraction_matrix([[gu[i] + gv[j] for j in range(n)]
                                   for i in range(m)])
        assert np.array_equal(rebuilt, mat)
    assert find_additive_decomposition(fraction_matrix([[4, 8], [8, 16]])) is None


def test_build_family_dispatch():
    assert build_family(FamilySpec("rank1", d=3)) == rank1_family(3)
    assert build_family(FamilySpec("sqdiff", d=2)) == squared_difference_family(2)
    assert build_family(FamilySpec("identity", d=4)) == identity_game(4)
    block = FamilySpec("block", inner=FamilySpec("identity", d=2),
                       outer=FamilySpec("rank1", d=3))
    assert build_family(block) == block_game(identity_game(2), rank1_family(3))
    poly = FamilySpec("poly", g=(1, 2, 3), coeffs=(0, 0, -1))
    assert build_family(poly) == squared_difference_family(3)
    with pytest.raises(ValueError):
        build_family(FamilySpec("rank1"))
    with pytest.raises(ValueError):
        build_family(FamilySpec("block", inner=FamilySpec("rank1", d=2)))
    with pytest.raises(ValueError):
        build_family(FamilySpec("nonsense", d=2))
