"""Exact simplex core: known optima, infeasibility, and optimality certificates."""

import random
from fractions import Fraction as F

import pytest

from sumint.simplex import Infeasible, solve_min_equalities


def test_single_equation_picks_cheaper_column():
    # min y1 + y2  s.t.  y1 + 2 y2 = 4
    value, solution, pi = solve_min_equalities([(1,), (2,)], (1, 1), (4,))
    assert value == 2
    assert solution == {1: F(2)}
    assert pi == (F(1, 2),)


def test_two_equations():
    # min y1 + y2 + y3  s.t.  y1 + y3 = 2, y2 + y3 = 2; optimum takes y3 = 2
    value, solution, _ = solve_min_equalities(
        [(1, 0), (0, 1), (1, 1)], (1, 1, 1), (2, 2)
    )
    assert value == 2
    assert solution == {2: F(2)}


def test_infeasible_sign():
    with pytest.raises(Infeasible):
        solve_min_equalities([(-1,)], (1,), (1,))


def test_negative_rhs_is_normalized():
    # y1 * (-2) = -6 has the nonnegative solution y1 = 3
    value, solution, _ = solve_min_equalities([(-2,)], (1,), (-6,))
    assert value == 3
    assert solution == {0: F(3)}


def test_redundant_zero_row_dropped():
    value, solution, pi = solve_min_equalities([(1, 0)], (1,), (1, 0))
    assert value == 1
    assert solution == {0: F(1)}
    assert pi[1] == 0


def test_dependent_consistent_row_dropped():
    # second equation is twice the first
    value, solution, _ = solve_min_equalities(
        [(1, 2), (3, 6)], (1, 1), (3, 6)
    )
    assert value == 1
    assert solution == {1: F(1)}


def _check_optimality_certificate(columns, costs, rhs, value, solution, pi):
    """Feasibility, objective consistency, dual feasibility, strong duality."""
    nrows = len(rhs)
    residual = [F(r) for r in rhs]
    for idx, y in solution.items():
        assert y > 0
        for r in range(nrows):
            residual[r] -= y * columns[idx][r]
    assert all(v == 0 for v in residual)
    assert sum(costs[i] * y for i, y in solution.items()) == value
    for col, cost in zip(columns, costs):
        assert cost - sum(p * v for p, v in zip(pi, col)) >= 0
    assert sum(p * r for p, r in zip(pi, rhs)) == value


def test_random_instances_carry_optimality_certificates():
    rng = random.Random(1789)
    solved = 0
    for _ in range(120):
        nrows = rng.randint(1, 4)
        ncols = rng.randint(nrows, nrows + 6)
        columns = [
            tuple(F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(nrows))
            for _ in range(ncols)
        ]
        costs = [F(rng.randint(0, 5)) for _ in range(ncols)]
        rhs = tuple(F(rng.randint(-3, 3)) for _ in range(nrows))
        try:
            value, solution, pi = solve_min_equalities(columns, costs, rhs)
        except Infeasible:
            continue
        solved += 1
        _check_optimality_certificate(columns, costs, rhs, value, solution, pi)
    assert solved > 30
