"""Bimatrix games with exact rational payoffs and equilibrium quality measures."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import (
    as_fraction,
    fraction_matrix,
    fraction_vector,
    matrix_rank,
    max_abs_entry,
)


class BimatrixGame:
    """Two-player game in matrix form: payoffs a for the row player, b for
    the column player.

    Immutable after construction; the payoff sum c = a + b, its exact rank,
    and its largest absolute entry norm_c (the scale every approximation
    guarantee is measured against) are computed once and frozen.

    Note the zero-sum corner: when a + b = 0, norm_c = 0 and the threshold
    eps * norm_c collapses to 0 for every eps, so only exact equilibria pass
    the approximate test. The formulas are applied literally rather than
    special-cased.
    """

    def __init__(self, a, b):
        a = fraction_matrix(a)
        b = fraction_matrix(b)
        if a.shape != b.shape:
            raise ValueError("payoff matrices must share a shape")
        self.a = a
        self.b = b
        self.c = a + b
        self.rank_c = matrix_rank(self.c)
        self.norm_c = max_abs_entry(self.c)
        for arr in (self.a, self.b, self.c):
            arr.flags.writeable = False

    @property
    def shape(self):
        return self.a.shape

    @property
    def m(self):
        return self.a.shape[0]

    @property
    def n(self):
        return self.a.shape[1]

    def __eq__(self, other):
        if not isinstance(other, BimatrixGame):
            return NotImplemented
        return (
            self.shape == other.shape
            and bool(np.array_equal(self.a, other.a))
            and bool(np.array_equal(self.b, other.b))
        )

    def __repr__(self):
        return f"BimatrixGame({self.m}x{self.n}, rank_c={self.rank_c})"


@dataclass(frozen=True)
class MixedProfile:
    """A mixed-strategy pair: x for the row player, y for the column player.

    Entries are Fractions, nonnegative, each vector summing to exactly 1.
    """

    x: tuple
    y: tuple

    def __post_init__(self):
        x = tuple(as_fraction(e) for e in self.x)
        y = tuple(as_fraction(e) for e in self.y)
        for vec, name in ((x, "x"), (y, "y")):
            if not vec:
                raise ValueError(f"{name} must be nonempty")
            if any(e < 0 for e in vec):
                raise ValueError(f"{name} has a negative entry")
            if sum(vec) != 1:
                raise ValueError(f"{name} must sum to 1 exactly")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def support1(self):
        return tuple(i for i, e in enumerate(self.x) if e > 0)

    @property
    def support2(self):
        return tuple(j for j, e in enumerate(self.y) if e > 0)


def pure_profile(m, n, i, j):
    """The profile playing row i against column j (0-based)."""
    x = [Fraction(0)] * m
    y = [Fraction(0)] * n
    x[i] = Fraction(1)
    y[j] = Fraction(1)
    return MixedProfile(tuple(x), tuple(y))


def _vectors(game, profile):
    if len(profile.x) != game.m or len(profile.y) != game.n:
        raise ValueError("profile dimensions do not match the game")
    return fraction_vector(profile.x), fraction_vector(profile.y)


def best_response_values(game, profile):
    """(best pure payoff against y for player 1, same against x for player 2)."""
    x, y = _vectors(game, profile)
    return Fraction(max(game.a @ y)), Fraction(max(x @ game.b))


def payoffs(game, profile):
    """(x a y, x b y): the realized payoffs of the two players."""
    x, y = _vectors(game, profile)
    return Fraction(x @ game.a @ y), Fraction(x @ game.b @ y)


def loss(game, profile):
    """Total incentive to deviate: max_i (a y)_i + max_j (x b)_j - x (a+b) y.

    Nonnegative for every profile; zero exactly at the equilibria.
    """
    x, y = _vectors(game, profile)
    return Fraction(max(game.a @ y) + max(x @ game.b) - x @ game.c @ y)


def is_exact_equilibrium(game, profile):
    return loss(game, profile) == 0


def is_approximate_equilibrium(game, profile, eps):
    """True when loss(game, profile) <= eps * |a+b| (max-entry scale)."""
    eps = as_fraction(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    return loss(game, profile) <= eps * game.norm_c


def check_deviation_bound(game, profile, eps):
    """Check every pure deviation pair directly.

    True when (a y)_i + (x b)_j - x (a+b) y <= eps * |a+b| for all pure rows
    i and columns j. Equivalent to is_approximate_equilibrium, but computed
    pair by pair rather than through the two maxima, which makes it a useful
    cross-check of the loss formula.
    """
    eps = as_fraction(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    x, y = _vectors(game, profile)
    ay = game.a @ y
    xb = x @ game.b
    base = x @ game.c @ y
    bound = eps * game.norm_c
    for i in range(game.m):
        for j in range(game.n):
            if ay[i] + xb[j] - base > bound:
                return False
    return True


def qp_objective(game, profile):
    """Objective of the equilibrium quadratic program at the profile.

    s - z Q z, where s is the sum of the two best-response values, z stacks
    (x, y), and Q is the block matrix with (a+b)/2 in the off-diagonal
    blocks. The block matrix is assembled explicitly so this is a genuinely
    different computation from loss(); the two agree on every profile, which
    is what makes the program's optima the equilibria.
    """
    x, y = _vectors(game, profile)
    m, n = game.shape
    half = game.c * Fraction(1, 2)
    q = np.full((m + n, m + n), Fraction(0), dtype=object)
    q[:m, m:] = half
    q[m:, :m] = half.T
    z = np.concatenate([x, y])
    s = sum(best_response_values(game, profile), Fraction(0))
    return Fraction(s - z @ q @ z)


@dataclass(frozen=True)
class EquilibriumReport:
    """One solution with its quality numbers.

    kind is 'exact', 'eps-approximate', or 'relative-approximate'; parameter
    carries the eps or the ratio bound rho for the approximate kinds and is
    None for exact. Supports are 0-based strategy index tuples.
    """

    profile: MixedProfile
    loss: Fraction
    payoff1: Fraction
    payoff2: Fraction
    kind: str
    parameter: Fraction | None
    support1: tuple
    support2: tuple


def make_report(game, profile, kind="exact", parameter=None):
    """Evaluate a profile into an EquilibriumReport."""
    if kind not in ("exact", "eps-approximate", "relative-approximate"):
        raise ValueError(f"unknown report kind {kind!r}")
    p1, p2 = payoffs(game, profile)
    return EquilibriumReport(
        profile=profile,
        loss=loss(game, profile),
        payoff1=p1,
        payoff2=p2,
        kind=kind,
        parameter=None if parameter is None else as_fraction(parameter),
        support1=profile.support1,
        support2=profile.support2,
    )
