"""Exact linear programming: two-phase simplex over Fractions with Bland's rule."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import as_fraction, fraction_matrix, fraction_vector

SENSES = ("<=", "=", ">=")


@dataclass(frozen=True, eq=False)
class LinearProgram:
    """Minimize objective . x subject to lhs x (senses) rhs and variable bounds.

    A None in lower/upper means that side is unbounded. Row order is part of
    the problem identity: the solver is deterministic for a fixed row order.
    """

    objective: tuple
    lhs: np.ndarray
    senses: tuple
    rhs: tuple
    lower: tuple
    upper: tuple

    @property
    def nvars(self):
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    """status is 'optimal', 'infeasible', or 'unbounded'; x and objective_value
    are None unless status is 'optimal'."""

    status: str
    x: tuple | None
    objective_value: Fraction | None


def _bound_list(bounds, nvars, default):
    if bounds is None:
        return tuple(default for _ in range(nvars))
    out = []
    for b in bounds:
        out.append(None if b is None else as_fraction(b))
    if len(out) != nvars:
        raise ValueError("bounds length does not match variable count")
    return tuple(out)


def linear_program(objective, lhs, senses, rhs, lower=None, upper=None):
    """Validate and pack an LP. lower defaults to all 0, upper to all None."""
    objective = tuple(fraction_vector(objective).tolist())
    nvars = len(objective)
    if nvars == 0:
        raise ValueError("need at least one variable")
    rows = [list(r) for r in lhs]
    if rows:
        mat = fraction_matrix(rows)
        if mat.shape[1] != nvars:
            raise ValueError("constraint row length does not match variable count")
    else:
        mat = np.empty((0, nvars), dtype=object)
    senses = tuple(senses)
    rhs = tuple(fraction_vector(rhs).tolist())
    if len(senses) != mat.shape[0] or len(rhs) != mat.shape[0]:
        raise ValueError("senses/rhs length does not match row count")
    for s in senses:
        if s not in SENSES:
            raise ValueError(f"unknown sense {s!r}")
    return LinearProgram(
        objective=objective,
        lhs=mat,
        senses=senses,
        rhs=rhs,
        lower=_bound_list(lower, nvars, Fraction(0)),
        upper=_bound_list(upper, nvars, None),
    )


def _pivot(rows, zrow, basis, r, col):
    prow = rows[r]
    inv = 1 / prow[col]
    if inv != 1:
        rows[r] = prow = [e * inv for e in prow]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[col]
        if f != 0:
            rows[i] = [a - f * b for a, b in zip(row, prow)]
    f = zrow[col]
    if f != 0:
        zrow[:] = [a - f * b for a, b in zip(zrow, prow)]
    basis[r] = col


def _price_out(cost, rows, basis):
    zrow = list(cost) + [Fraction(0)]
    for i, b in enumerate(basis):
        f = cost[b]
        if f != 0:
            zrow = [a - f * b_ for a, b_ in zip(zrow, rows[i])]
    return zrow


def _iterate(rows, zrow, basis, ncols):
    """Run Bland-rule simplex iterations; return 'optimal' or 'unbounded'."""
    while True:
        col = None
        for j in range(ncols):
            if zrow[j] < 0:
                col = j
                break
        if col is None:
            return "optimal"
        leave = None
        best = None
        for i, row in enumerate(rows):
            a = row[col]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded"
        _pivot(rows, zrow, basis, leave, col)


def solve_lp(lp):
    """Solve an LP exactly.

    Two-phase simplex on the standard-form rewrite of the problem. Bland's
    rule picks both the entering and the leaving variable, so the run never
    cycles and is fully deterministic.
    """
    if not isinstance(lp, LinearProgram):
        raise TypeError("expected a LinearProgram")
    nvars = lp.nvars

    # rewrite each variable as a nonnegative combination: x_j = const + sum sign*t
    const = []
    terms = []
    nstd = 0
    bound_rows = []
    for j in range(nvars):
        lo, up = lp.lower[j], lp.upper[j]
        if lo is not None:
            if up is not None:
                if up < lo:
                    return LpSolution("infeasible", None, None)
                bound_rows.append((nstd, up - lo))
            const.append(lo)
            terms.append(((nstd, 1),))
            nstd += 1
        elif up is not None:
            const.append(up)
            terms.append(((nstd, -1),))
            nstd += 1
        else:
            const.append(Fraction(0))
            terms.append(((nstd, 1), (nstd + 1, -1)))
            nstd += 2

    raw = []
    for i in range(lp.lhs.shape[0]):
        coeffs = [Fraction(0)] * nstd
        shift = Fraction(0)
        for j in range(nvars):
            a = lp.lhs[i, j]
            if a == 0:
                continue
            shift += a * const[j]
            for t, sign in terms[j]:
                coeffs[t] += a if sign > 0 else -a
        raw.append((coeffs, lp.senses[i], lp.rhs[i] - shift))
    for t, ub in bound_rows:
        coeffs = [Fraction(0)] * nstd
        coeffs[t] = Fraction(1)
        raw.append((coeffs, "<=", ub))

    nslack = sum(1 for _, s, _ in raw if s != "=")
    ncols = nstd + nslack
    rows = []
    slack_sign = {}
    k = 0
    for coeffs, sense, b in raw:
        row = coeffs + [Fraction(0)] * nslack + [b]
        if sense != "=":
            row[nstd + k] = Fraction(1) if sense == "<=" else Fraction(-1)
            slack_sign[len(rows)] = (nstd + k, row[nstd + k])
            k += 1
        if b < 0:
            row = [-e for e in row]
            if len(rows) in slack_sign:
                c, s = slack_sign[len(rows)]
                slack_sign[len(rows)] = (c, -s)
        rows.append(row)

    # crash basis: a +1 slack can start basic, every other row gets an artificial
    basis = [None] * len(rows)
    art_cols = []
    for i in range(len(rows)):
        if i in slack_sign and slack_sign[i][1] > 0:
            basis[i] = slack_sign[i][0]
    for i in range(len(rows)):
        if basis[i] is None:
            c = ncols + len(art_cols)
            art_cols.append(c)
            basis[i] = c
    if art_cols:
        total = ncols + len(art_cols)
        for i, row in enumerate(rows):
            ext = [Fraction(0)] * len(art_cols)
            if basis[i] >= ncols:
                ext[basis[i] - ncols] = Fraction(1)
            rows[i] = row[:-1] + ext + [row[-1]]
        cost1 = [Fraction(0)] * ncols + [Fraction(1)] * len(art_cols)
        zrow = _price_out(cost1, rows, basis)
        _iterate(rows, zrow, basis, total)
        if -zrow[-1] > 0:
            return LpSolution("infeasible", None, None)
        # pivot leftover artificials out; an all-zero row is redundant
        for i in range(len(rows)):
            if basis[i] >= ncols:
                col = next((j for j in range(ncols) if rows[i][j] != 0), None)
                if col is not None:
                    _pivot(rows, zrow, basis, i, col)
        keep = [i for i in range(len(rows)) if basis[i] < ncols]
        rows = [rows[i][:ncols] + [rows[i][-1]] for i in keep]
        basis = [basis[i] for i in keep]

    cost2 = [Fraction(0)] * ncols
    for j in range(nvars):
        cj = lp.objective[j]
        if cj == 0:
            continue
        for t, sign in terms[j]:
            cost2[t] += cj if sign > 0 else -cj
    zrow = _price_out(cost2, rows, basis)
    if _iterate(rows, zrow, basis, ncols) == "unbounded":
        return LpSolution("unbounded", None, None)

    std = [Fraction(0)] * nstd
    for i, b in enumerate(basis):
        if b < nstd:
            std[b] = rows[i][-1]
    x = []
    for j in range(nvars):
        val = const[j]
        for t, sign in terms[j]:
            val += std[t] if sign > 0 else -std[t]
        x.append(val)
    value = sum((cj * xj for cj, xj in zip(lp.objective, x)), Fraction(0))
    return LpSolution("optimal", tuple(x), value)
