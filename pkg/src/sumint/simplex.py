"""Exact rational simplex for small equality-form linear programs.

Solves  min c.y  subject to  sum_i y_i * col_i = rhs,  y >= 0  entirely in
Fraction arithmetic: two phases, revised iterations with the basis system
re-solved exactly each step (the basis never exceeds a handful of rows
here), and Bland's rule for both the entering and the leaving choice, so
runs are deterministic and cycling is impossible.

The multipliers of the optimal basis are returned alongside the optimum;
for the certificate-search duals built on top of this module they are the
primal solution of interest.  Rows that turn out linearly dependent are
dropped after phase 1 (their multipliers are reported as 0), which is exact:
a dependent consistent equation is implied by the others.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

ZERO = Fraction(0)


class Infeasible(Exception):
    """The equality system admits no nonnegative solution."""


class Unbounded(Exception):
    """The objective is unbounded below (cannot occur with nonnegative costs)."""


def _solve_square(matrix: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Exact Gaussian elimination; matrix must be nonsingular."""
    m = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if a[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular basis matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][m] for r in range(m)]


class _Program:
    def __init__(self, columns, costs, rhs):
        self.ncols = len(columns)
        self.columns = [tuple(Fraction(v) for v in col) for col in columns]
        self.costs = [Fraction(c) for c in costs]
        self.full_rhs = [Fraction(v) for v in rhs]
        self.active = list(range(len(rhs)))
        # sign-normalize so the artificial start is feasible
        self.row_sign = [1 if v >= 0 else -1 for v in self.full_rhs]
        self.basis: List[int] = [self.ncols + r for r in self.active]

    def _col(self, cid: int) -> List[Fraction]:
        if cid < self.ncols:
            col = self.columns[cid]
            return [self.row_sign[r] * col[r] for r in self.active]
        row = cid - self.ncols
        return [Fraction(1) if r == row else ZERO for r in self.active]

    def _rhs(self) -> List[Fraction]:
        return [self.row_sign[r] * self.full_rhs[r] for r in self.active]

    def _basis_matrix(self) -> List[List[Fraction]]:
        cols = [self._col(b) for b in self.basis]
        return [[cols[i][r] for i in range(len(self.basis))] for r in range(len(self.active))]

    def _cost(self, cid: int, phase: int) -> Fraction:
        if phase == 1:
            return ZERO if cid < self.ncols else Fraction(1)
        return self.costs[cid]

    def _iterate(self, phase: int) -> List[Fraction]:
        """Run Bland-rule pivots to optimality; returns the basic values."""
        while True:
            b_matrix = self._basis_matrix()
            x_basic = _solve_square(b_matrix, self._rhs())
            transpose = [list(row) for row in zip(*b_matrix)]
            pi = _solve_square(transpose, [self._cost(b, phase) for b in self.basis])
            entering = None
            in_basis = set(self.basis)
            for cid in range(self.ncols):
                if cid in in_basis:
                    continue
                reduced = self._cost(cid, phase) - sum(
                    p * v for p, v in zip(pi, self._col(cid)) if v
                )
                if reduced < 0:
                    entering = cid
                    break
            if entering is None:
                return x_basic
            direction = _solve_square(self._basis_matrix(), self._col(entering))
            theta = None
            leave = None
            for pos, step in enumerate(direction):
                if step > 0:
                    ratio = x_basic[pos] / step
                    if theta is None or ratio < theta or (
                        ratio == theta and self.basis[pos] < self.basis[leave]
                    ):
                        theta, leave = ratio, pos
            if leave is None:
                raise Unbounded("improving direction with no blocking variable")
            self.basis[leave] = entering

    def _expel_artificials(self) -> None:
        """After phase 1: pivot zero-level artificials out or drop their rows."""
        pos = 0
        while pos < len(self.basis):
            if self.basis[pos] < self.ncols:
                pos += 1
                continue
            b_matrix = self._basis_matrix()
            transpose = [list(row) for row in zip(*b_matrix)]
            unit = [Fraction(1) if i == pos else ZERO for i in range(len(self.basis))]
            w = _solve_square(transpose, unit)
            replacement = None
            in_basis = set(self.basis)
            for cid in range(self.ncols):
                if cid in in_basis:
                    continue
                if sum(p * v for p, v in zip(w, self._col(cid)) if v) != 0:
                    replacement = cid
                    break
            if replacement is not None:
                self.basis[pos] = replacement
                pos += 1
            else:
                # row is a consequence of the others; remove it with its artificial
                row = self.basis[pos] - self.ncols
                self.active.remove(row)
                del self.basis[pos]

    def solve(self) -> Tuple[Fraction, Dict[int, Fraction], Tuple[Fraction, ...]]:
        phase1 = self._iterate(phase=1)
        infeas = sum(
            (x for b, x in zip(self.basis, phase1) if b >= self.ncols), ZERO
        )
        if infeas != 0:
            raise Infeasible("artificial variables remain positive")
        self._expel_artificials()
        x_basic = self._iterate(phase=2)
        value = sum(
            (self.costs[b] * x for b, x in zip(self.basis, x_basic)), ZERO
        )
        solution = {b: x for b, x in zip(self.basis, x_basic) if x != 0}
        transpose = [list(row) for row in zip(*self._basis_matrix())]
        pi_active = _solve_square(transpose, [self.costs[b] for b in self.basis])
        multipliers = [ZERO] * len(self.full_rhs)
        for r, p in zip(self.active, pi_active):
            multipliers[r] = self.row_sign[r] * p
        return value, solution, tuple(multipliers)


def solve_min_equalities(
    columns: Sequence[Sequence[Fraction]],
    costs: Sequence[Fraction],
    rhs: Sequence[Fraction],
) -> Tuple[Fraction, Dict[int, Fraction], Tuple[Fraction, ...]]:
    """Minimize costs.y over  {y >= 0 : sum_i y_i columns[i] = rhs}.

    Returns (optimal value, nonzero coordinates of an optimal y, optimal
    basis multipliers indexed by row).  Raises Infeasible when the system has
    no nonnegative solution.
    """
    if len(columns) != len(costs):
        raise ValueError("one cost per column required")
    nrows = len(rhs)
    for col in columns:
        if len(col) != nrows:
            raise ValueError("column length must match rhs length")
    return _Program(columns, costs, rhs).solve()
