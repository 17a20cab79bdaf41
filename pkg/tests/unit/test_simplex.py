"""
Unit tests for the dense two-phase simplex solver
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from src.core.errors import SizeLimit
from src.lp.simplex import MAX_VARIABLES, LinearProgram, LpStatus, Relation, solve


def reference_value(lp: LinearProgram) -> float:
    """Optimal value from HiGHS for the same maximization."""
    ub_rows, ub_rhs, eq_rows, eq_rhs = [], [], [], []
    for c in lp.constraints:
        if c.relation == Relation.LE:
            ub_rows.append(c.row)
            ub_rhs.append(c.rhs)
        elif c.relation == Relation.GE:
            ub_rows.append([-v for v in c.row])
            ub_rhs.append(-c.rhs)
        else:
            eq_rows.append(c.row)
            eq_rhs.append(c.rhs)
    result = linprog(
        -np.asarray(lp.objective),
        A_ub=ub_rows or None, b_ub=ub_rhs or None,
        A_eq=eq_rows or None, b_eq=eq_rhs or None,
        bounds=lp.bounds, method="highs",
    )
    assert result.status == 0
    return -result.fun


def feasible(lp: LinearProgram, x: np.ndarray, tol: float = 1e-7) -> bool:
    for c in lp.constraints:
        lhs = float(np.dot(c.row, x))
        if c.relation == Relation.LE and lhs > c.rhs + tol:
            return False
        if c.relation == Relation.GE and lhs < c.rhs - tol:
            return False
        if c.relation == Relation.EQ and abs(lhs - c.rhs) > tol:
            return False
    for value, (low, high) in zip(x, lp.bounds):
        if low is not None and value < low - tol:
            return False
        if high is not None and value > high + tol:
            return False
    return True


def test_two_variable_program():
    """Test a textbook program with a vertex optimum."""
    lp = LinearProgram([1.0, 1.0])
    lp.add_constraint([1.0, 2.0], Relation.LE, 4.0)
    lp.add_constraint([3.0, 1.0], Relation.LE, 6.0)
    solution = solve(lp)
    assert solution.optimal
    assert solution.value == pytest.approx(2.8)
    assert solution.point == pytest.approx([1.6, 1.2])


def test_infeasible_program():
    """Test contradictory bounds report Infeasible."""
    lp = LinearProgram([1.0])
    lp.add_constraint([1.0], Relation.GE, 2.0)
    lp.add_constraint([1.0], Relation.LE, 1.0)
    assert solve(lp).status == LpStatus.INFEASIBLE


def test_unbounded_program():
    """Test an unconstrained positive objective reports Unbounded."""
    assert solve(LinearProgram([1.0, 0.0])).status == LpStatus.UNBOUNDED
    lp = LinearProgram([1.0, 1.0])
    lp.add_constraint([1.0, -1.0], Relation.LE, 1.0)
    assert solve(lp).status == LpStatus.UNBOUNDED


def test_free_variables_and_equalities():
    """Test free and shifted bounds through an equality row."""
    lp = LinearProgram([1.0, 0.0], bounds=[(None, None), (-3.0, None)])
    lp.add_constraint([1.0, 1.0], Relation.EQ, 1.0)
    solution = solve(lp)
    assert solution.optimal
    assert solution.value == pytest.approx(4.0)
    assert solution.point == pytest.approx([4.0, -3.0])


def test_upper_bounds():
    """Test finite upper bounds act as constraints."""
    lp = LinearProgram([2.0, -1.0], bounds=[(None, 1.5), (-1.0, 1.0)])
    solution = solve(lp)
    assert solution.optimal
    assert solution.value == pytest.approx(4.0)


def test_degenerate_cycling_program():
    """Test a classical cycling example terminates at the optimum."""
    lp = LinearProgram([0.75, -20.0, 0.5, -6.0])
    lp.add_constraint([0.25, -8.0, -1.0, 9.0], Relation.LE, 0.0)
    lp.add_constraint([0.5, -12.0, -0.5, 3.0], Relation.LE, 0.0)
    lp.add_constraint([0.0, 0.0, 1.0, 0.0], Relation.LE, 1.0)
    solution = solve(lp)
    assert solution.optimal
    assert solution.value == pytest.approx(1.25)
    assert solution.value == pytest.approx(reference_value(lp))


def test_size_limit():
    """Test programs beyond the variable cap raise SizeLimit."""
    with pytest.raises(SizeLimit):
        solve(LinearProgram([1.0] * (MAX_VARIABLES + 1)))


def test_rejects_malformed_rows():
    """Test row length and rhs validation."""
    lp = LinearProgram([1.0, 1.0])
    with pytest.raises(ValueError):
        lp.add_constraint([1.0], Relation.LE, 1.0)
    with pytest.raises(ValueError):
        lp.add_constraint([1.0, 1.0], Relation.LE, float("inf"))
    with pytest.raises(ValueError):
        LinearProgram([1.0, 1.0], bounds=[(0.0, None)])


coefficient = st.floats(min_value=-5, max_value=5, allow_nan=False).map(lambda v: round(v, 3))


@st.composite
def boxed_programs(draw):
    """Feasible (origin inside) and bounded (box) random programs."""
    n = draw(st.integers(min_value=1, max_value=5))
    m = draw(st.integers(min_value=0, max_value=6))
    lp = LinearProgram(draw(st.lists(coefficient, min_size=n, max_size=n)),
                       bounds=[(-4.0, 4.0)] * n)
    for _ in range(m):
        row = draw(st.lists(coefficient, min_size=n, max_size=n))
        rhs = draw(st.floats(min_value=0, max_value=5, allow_nan=False))
        relation = draw(st.sampled_from([Relation.LE, Relation.GE]))
        lp.add_constraint(row, relation, rhs if relation == Relation.LE else -rhs)
    return lp


@settings(max_examples=60, deadline=None)
@given(lp=boxed_programs())
def test_matches_reference_solver(lp):
    """Test optimal values agree with HiGHS and the point is feasible."""
    solution = solve(lp)
    assert solution.optimal
    assert feasible(lp, solution.point)
    assert solution.value == pytest.approx(reference_value(lp), abs=1e-6)


@settings(max_examples=30, deadline=None)
@given(lp=boxed_programs(), seed=st.integers(min_value=0, max_value=1000))
def test_constraint_order_does_not_change_value(lp, seed):
    """Test permuting constraint rows keeps the optimal value."""
    order = np.random.default_rng(seed).permutation(len(lp.constraints))
    shuffled = LinearProgram(lp.objective, [lp.constraints[i] for i in order], list(lp.bounds))
    assert solve(shuffled).value == pytest.approx(solve(lp).value, abs=1e-7)
