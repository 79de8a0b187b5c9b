"""Exact linear algebra over Fraction entries."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def as_fraction(value):
    """Convert an int, a string like '-3/4', or a Fraction to a Fraction.

    Floats are rejected on purpose: everything in this package is exact, and a
    float slipping in here would silently poison that. Rationalize floats
    explicitly (see approx.svd_truncate) before they reach this layer.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        f"expected int, fraction string, or Fraction, got {type(value).__name__}"
    )


def fraction_vector(entries):
    """Build a 1-d object array of Fractions."""
    entries = list(entries)
    vec = np.empty(len(entries), dtype=object)
    for i, e in enumerate(entries):
        vec[i] = as_fraction(e)
    return vec


def fraction_matrix(rows):
    """Build a 2-d object array of Fractions from nested sequences."""
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        rows = rows.tolist()
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        raise ValueError("matrix must have at least one row and one column")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("rows have unequal lengths")
    mat = np.empty((len(rows), n), dtype=object)
    for i, row in enumerate(rows):
        for j, e in enumerate(row):
            mat[i, j] = as_fraction(e)
    return mat


def max_abs_entry(matrix):
    """Largest absolute value of any entry, as a Fraction."""
    return Fraction(max(abs(e) for e in np.asarray(matrix).flat))


def _echelon(rows):
    """Row-reduce a list of Fraction lists in place; return pivot count.

    Pivots are taken column by column, first nonzero row wins, so the result
    is deterministic for a given input.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for i in range(rank + 1, m):
            f = rows[i][col]
            if f == 0:
                continue
            f *= inv
            rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(matrix):
    """Exact rank via Gaussian elimination over the rationals."""
    mat = fraction_matrix(matrix)
    return _echelon([list(r) for r in mat.tolist()])


def solve_linear_system(a, b):
    """Solve the square system a x = b exactly.

    Returns a tuple of Fractions, or None when the system has no unique
    solution (singular matrix, whether inconsistent or underdetermined).
    """
    a = fraction_matrix(a)
    n, nc = a.shape
    if n != nc:
        raise ValueError("coefficient matrix must be square")
    b = fraction_vector(b)
    if len(b) != n:
        raise ValueError("right-hand side length does not match")
    rows = [list(ra) + [rb] for ra, rb in zip(a.tolist(), b.tolist())]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        prow = rows[col]
        inv = 1 / prow[col]
        for i in range(n):
            if i == col:
                continue
            f = rows[i][col]
            if f == 0:
                continue
            f *= inv
            rows[i] = [a_ - f * b_ for a_, b_ in zip(rows[i], prow)]
    return tuple(rows[i][n] / rows[i][i] for i in range(n))


@dataclass(frozen=True)
class RankFactorization:
    """Sum-of-outer-products form C = sum of u v^T over the stored pairs.

    The number of pairs equals the exact rank. `nonnegative` records whether
    every entry of every u and v is >= 0, which is what the relative
    approximation scheme needs from its input.
    """

    shape: tuple[int, int]
    pairs: tuple[tuple[tuple[Fraction, ...], tuple[Fraction, ...]], ...]
    nonnegative: bool

    @property
    def rank(self):
        return len(self.pairs)

    def matrix(self):
        m, n = self.shape
        total = np.full((m, n), Fraction(0), dtype=object)
        for u, v in self.pairs:
            total = total + np.outer(fraction_vector(u), fraction_vector(v))
        return total


def rank_factorize(matrix):
    """Canonical rank factorization by iterated rank-one peeling.

    Each step takes the first nonzero entry in column order as pivot, peels
    the rank-one product (pivot column) x (pivot row / pivot), and repeats on
    the residual. Each pair is scaled so the first nonzero entry of its u is
    positive. The pair count always equals matrix_rank of the input.
    """
    mat = fraction_matrix(matrix)
    m, n = mat.shape
    work = [list(r) for r in mat.tolist()]
    pairs = []
    while True:
        pivot = None
        for j in range(n):
            for i in range(m):
                if work[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot is not None:
                break
        if pivot is None:
            break
        pi, pj = pivot
        p = work[pi][pj]
        u = [work[i][pj] for i in range(m)]
        v = [work[pi][j] / p for j in range(n)]
        # u's first nonzero is the pivot itself; flip both if it is negative
        # (the product u v^T is unchanged, so the peel below uses them as is)
        if p < 0:
            u = [-e for e in u]
            v = [-e for e in v]
        for i in range(m):
            if u[i] == 0:
                continue
            ui = u[i]
            work[i] = [w - ui * vj for w, vj in zip(work[i], v)]
        pairs.append((tuple(u), tuple(v)))
    nonneg = all(e >= 0 for u, v in pairs for e in (*u, *v))
    return RankFactorization(shape=(m, n), pairs=tuple(pairs), nonnegative=nonneg)
