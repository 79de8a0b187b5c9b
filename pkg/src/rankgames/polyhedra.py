"""Best-response polyhedra of a bimatrix game and their vertex enumeration."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .linalg import fraction_vector, solve_linear_system


@dataclass(frozen=True)
class BestResponsePolyhedron:
    """One player's best-response polyhedron in (strategy, payoff) space.

    side 'P' is the row player's: points (x, v) with x >= 0, x b <= v per
    column, sum x = 1. side 'Q' is the column player's: points (y, u) with
    a y <= u per row, y >= 0, sum y = 1.

    Inequality rows are stored as ineqs z <= 0 and carry 1-based labels
    1..m+n, the convention the vertex-census and joint-cover statements are
    written in: labels 1..m are the row player's strategies (x_i >= 0 on the
    P side, row i's best-response inequality on the Q side) and labels
    m+1..m+n are the column player's (column j's best-response inequality on
    the P side, y_j >= 0 on the Q side).
    """

    side: str
    strategy_len: int
    ineqs: np.ndarray
    labels: tuple
    br_labels: frozenset
    nonneg_labels: frozenset

    @property
    def dim(self):
        return self.strategy_len + 1


@dataclass(frozen=True)
class PolyhedronVertex:
    """A vertex: point = (strategy coordinates..., payoff); binding holds the
    1-based labels of the inequalities tight at the point."""

    point: tuple
    binding: frozenset

    @property
    def strategy(self):
        return self.point[:-1]

    @property
    def payoff(self):
        return self.point[-1]

    @property
    def support(self):
        return tuple(i for i, e in enumerate(self.strategy) if e > 0)


def build_polyhedra(game):
    """The pair (P side, Q side) of best-response polyhedra of the game."""
    m, n = game.shape
    p_rows = []
    p_labels = []
    for i in range(m):  # x_i >= 0, label i+1
        row = [Fraction(0)] * (m + 1)
        row[i] = Fraction(-1)
        p_rows.append(row)
        p_labels.append(i + 1)
    for j in range(n):  # x b_j <= v, label m+j+1
        row = [game.b[i, j] for i in range(m)] + [Fraction(-1)]
        p_rows.append(row)
        p_labels.append(m + j + 1)
    q_rows = []
    q_labels = []
    for i in range(m):  # a_i y <= u, label i+1
        row = [game.a[i, j] for j in range(n)] + [Fraction(-1)]
        q_rows.append(row)
        q_labels.append(i + 1)
    for j in range(n):  # y_j >= 0, label m+j+1
        row = [Fraction(0)] * (n + 1)
        row[j] = Fraction(-1)
        q_rows.append(row)
        q_labels.append(m + j + 1)

    def pack(side, slen, rows, labels, br, nonneg):
        mat = np.empty((len(rows), slen + 1), dtype=object)
        for r, row in enumerate(rows):
            mat[r, :] = row
        mat.flags.writeable = False
        return BestResponsePolyhedron(
            side=side,
            strategy_len=slen,
            ineqs=mat,
            labels=tuple(labels),
            br_labels=frozenset(br),
            nonneg_labels=frozenset(nonneg),
        )

    p = pack("P", m, p_rows, p_labels,
             range(m + 1, m + n + 1), range(1, m + 1))
    q = pack("Q", n, q_rows, q_labels,
             range(1, m + 1), range(m + 1, m + n + 1))
    return p, q


def enumerate_vertices(poly):
    """All vertices, each with its complete binding label set.

    Basis search: every choice of strategy_len inequality rows is solved as
    equalities together with the normalization row; nonsingular systems give
    candidate points, kept when they satisfy every inequality. Every vertex
    of a pointed polyhedron is hit by at least one nonsingular choice, so
    the enumeration is exhaustive. Output is deduplicated and sorted by
    point, so the order is deterministic.
    """
    k = poly.ineqs.shape[0]
    d = poly.dim
    norm_row = [Fraction(1)] * poly.strategy_len + [Fraction(0)]
    seen = {}
    for subset in combinations(range(k), d - 1):
        a = [norm_row] + [list(poly.ineqs[r]) for r in subset]
        b = [Fraction(1)] + [Fraction(0)] * (d - 1)
        point = solve_linear_system(a, b)
        if point is None:
            continue
        if point in seen:
            continue
        z = fraction_vector(point)
        values = poly.ineqs @ z
        if any(val > 0 for val in values):
            continue
        binding = frozenset(
            poly.labels[r] for r, val in enumerate(values) if val == 0
        )
        seen[point] = PolyhedronVertex(point=point, binding=binding)
    return tuple(seen[p] for p in sorted(seen))


def is_nondegenerate(game):
    """Nondegeneracy of the game, checked on the polyhedron vertices.

    The defining condition: no mixed x has more than |support(x)| pure best
    responses for the other player, and likewise for y. A violation at any
    strategy forces a violation at some vertex of the corresponding
    best-response polyhedron (every face of a pointed polyhedron contains a
    vertex, and the binding-label count only grows toward the vertex), so
    checking vertices is sound and complete.
    """
    p, q = build_polyhedra(game)
    for poly in (p, q):
        for vertex in enumerate_vertices(poly):
            support = len(vertex.support)
            br = sum(1 for lab in vertex.binding if lab in poly.br_labels)
            if br > support:
                return False
    return True
