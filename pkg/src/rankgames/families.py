"""Construction of bimatrix game families with controlled payoff-sum rank."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .games import BimatrixGame
from .linalg import as_fraction, fraction_matrix, fraction_vector


def rank1_family(d):
    """The d x d game with a_ij = 2ij - i^2 + j^2 and b = a^T (1-based i, j).

    The payoff sum is (4ij), a rank-1 matrix, yet the game has exactly
    2d - 1 equilibria: the d symmetric pure profiles (e_i, e_i) and the
    d - 1 symmetric half-half mixes of adjacent rows/columns.
    """
    if d < 1:
        raise ValueError("d must be positive")
    a = np.empty((d, d), dtype=object)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            a[i - 1, j - 1] = Fraction(2 * i * j - i * i + j * j)
    return BimatrixGame(a, a.T)


def squared_difference_family(d):
    """The symmetric d x d game with both payoffs -(i - j)^2.

    Same best-response structure (so the same equilibria) as rank1_family:
    its payoff columns differ from that game's only by column-constant
    shifts. The payoff sum -2(i-j)^2 has rank 3 once d >= 3.
    """
    if d < 1:
        raise ValueError("d must be positive")
    a = np.empty((d, d), dtype=object)
    for i in range(d):
        for j in range(d):
            a[i, j] = Fraction(-((i - j) ** 2))
    return BimatrixGame(a, a.copy())


def identity_game(d):
    """Coordination game: both players receive the d x d identity payoffs.

    Has 2^d - 1 equilibria (a uniform mix on each nonempty subset, played by
    both), which meets the lower-bound count tau(d) for d <= 4.
    """
    if d < 1:
        raise ValueError("d must be positive")
    eye = np.full((d, d), Fraction(0), dtype=object)
    for i in range(d):
        eye[i, i] = Fraction(1)
    return BimatrixGame(eye, eye.copy())


def block_game(inner, outer):
    """Block-diagonal composition: inner in the top-left block, outer in the
    bottom-right, zeros elsewhere, for both payoff matrices.

    Both components must be square. The payoff-sum rank is the sum of the
    component ranks.
    """
    if inner.m != inner.n or outer.m != outer.n:
        raise ValueError("block components must be square games")
    d1, d2 = inner.m, outer.m
    d = d1 + d2

    def diag(top, bottom):
        mat = np.full((d, d), Fraction(0), dtype=object)
        mat[:d1, :d1] = top
        mat[d1:, d1:] = bottom
        return mat

    return BimatrixGame(diag(inner.a, outer.a), diag(inner.b, outer.b))


def polynomial_kernel_matrix(g, coeffs):
    """The matrix with entries p(g_i - g_j) for a polynomial p.

    coeffs lists the coefficients of p by ascending power. The resulting
    matrix has rank at most (deg+1)(deg+2)/2 regardless of the grid g,
    because each power (g_i - g_j)^t expands into deg+1 separable terms.
    """
    g = [as_fraction(e) for e in g]
    coeffs = [as_fraction(e) for e in coeffs]
    if not g:
        raise ValueError("grid g must be nonempty")
    if not coeffs:
        raise ValueError("need at least one coefficient")
    d = len(g)
    mat = np.empty((d, d), dtype=object)
    for i in range(d):
        for j in range(d):
            t = g[i] - g[j]
            acc = Fraction(0)
            power = Fraction(1)
            for c in coeffs:
                acc += c * power
                power *= t
            mat[i, j] = acc
    return mat


def polynomial_kernel_game(g, coeffs):
    """Symmetric game giving both players the polynomial kernel payoffs.

    Generalizes squared_difference_family, which is the kernel p(t) = -t^2
    on the grid g = (1, ..., d)."""
    mat = polynomial_kernel_matrix(g, coeffs)
    return BimatrixGame(mat, mat.copy())


def additive_to_zero_sum(game, u, v):
    """Rewrite a game with additively separable payoff sum as a zero-sum game.

    Requires a_ij + b_ij = u_i + v_j for all i, j. The returned game has
    a'_ij = a_ij - v_j and b'_ij = b_ij - u_i, so a' + b' = 0. Each player's
    payoff changes by an amount outside their own control, which is why the
    equilibria (and the whole best-response structure) are preserved.
    """
    u = fraction_vector(u)
    v = fraction_vector(v)
    if len(u) != game.m or len(v) != game.n:
        raise ValueError("u/v lengths must match the game dimensions")
    for i in range(game.m):
        for j in range(game.n):
            if game.c[i, j] != u[i] + v[j]:
                raise ValueError("payoff sum is not u_i + v_j at every entry")
    a2 = game.a - np.outer(np.full(game.m, Fraction(1), dtype=object), v)
    b2 = game.b - np.outer(u, np.full(game.n, Fraction(1), dtype=object))
    return BimatrixGame(a2, b2)


def find_additive_decomposition(matrix):
    """Split c_ij = u_i + v_j if possible, normalizing u_0 = 0.

    Returns (u, v) as Fraction tuples, or None when the matrix is not
    additively separable.
    """
    c = fraction_matrix(matrix)
    m, n = c.shape
    u = tuple(c[i, 0] - c[0, 0] for i in range(m))
    v = tuple(c[0, j] for j in range(n))
    for i in range(m):
        for j in range(n):
            if c[i, j] != u[i] + v[j]:
                return None
    return u, v


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for a constructed game: family tag plus its parameters.

    Tags: 'rank1', 'sqdiff', 'identity' (need d), 'block' (needs inner and
    outer specs), 'poly' (needs grid g and polynomial coeffs).
    """

    family: str
    d: int | None = None
    inner: "FamilySpec | None" = None
    outer: "FamilySpec | None" = None
    g: tuple | None = None
    coeffs: tuple | None = None


def build_family(spec):
    """Construct the BimatrixGame described by a FamilySpec."""
    tag = spec.family
    if tag in ("rank1", "sqdiff", "identity"):
        if spec.d is None:
            raise ValueError(f"family {tag!r} needs d")
        by_tag = {
            "rank1": rank1_family,
            "sqdiff": squared_difference_family,
            "identity": identity_game,
        }
        return by_tag[tag](spec.d)
    if tag == "block":
        if spec.inner is None or spec.outer is None:
            raise ValueError("family 'block' needs inner and outer specs")
        return block_game(build_family(spec.inner), build_family(spec.outer))
    if tag == "poly":
        if spec.g is None or spec.coeffs is None:
            raise ValueError("family 'poly' needs g and coeffs")
        return polynomial_kernel_game(spec.g, spec.coeffs)
    raise ValueError(f"unknown family tag {tag!r}")
