"""Shared generators for the seeded randomized tests."""

from fractions import Fraction

from rankgames import BimatrixGame, MixedProfile


def random_matrix(rng, m, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def random_game(rng, m, n, lo=-9, hi=9):
    return BimatrixGame(random_matrix(rng, m, n, lo, hi),
                        random_matrix(rng, m, n, lo, hi))


def random_simplex_point(rng, d):
    weights = [rng.randint(1, 9) for _ in range(d)]
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


def random_profile(rng, m, n):
    return MixedProfile(random_simplex_point(rng, m),
                        random_simplex_point(rng, n))


def profile_set(reports):
    """The set of profiles behind a report list (order-insensitive compare)."""
    return {r.profile for r in reports}
