"""
Dense Simplex Solver
Two-phase tableau simplex for the small linear programs behind every geometric oracle
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import NumericalError, SizeLimit

logger = logging.getLogger(__name__)

MAX_VARIABLES = 64
MAX_CONSTRAINTS = 4096

# Pivot tolerances are tighter than the library TOL so that optimal points
# still satisfy constraints to TOL after back-substitution.
PIVOT_TOL = 1e-11
FEASIBILITY_TOL = 1e-9
MAX_ITERATIONS = 50000

Bound = Tuple[Optional[float], Optional[float]]


class Relation(str, Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class LpStatus(str, Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class Constraint:
    """A single row: row . x (relation) rhs."""
    row: Tuple[float, ...]
    relation: Relation
    rhs: float


@dataclass
class LinearProgram:
    """
    Maximize objective . x subject to constraints and per-variable bounds.

    Bounds default to (0, None) for every variable, matching the usual
    standard form; use (None, None) for a free variable.
    """
    objective: Sequence[float]
    constraints: List[Constraint] = field(default_factory=list)
    bounds: Optional[List[Bound]] = None

    def __post_init__(self):
        self.objective = np.asarray(self.objective, dtype=float)
        n = self.objective.size
        if self.bounds is None:
            self.bounds = [(0.0, None)] * n
        if len(self.bounds) != n:
            raise ValueError(f"Expected {n} bounds, got {len(self.bounds)}")
        for c in self.constraints:
            self._check_row(c)

    @property
    def num_variables(self) -> int:
        return int(self.objective.size)

    def _check_row(self, constraint: Constraint) -> None:
        if len(constraint.row) != self.num_variables:
            raise ValueError(
                f"Constraint row has {len(constraint.row)} entries, expected {self.num_variables}"
            )
        if not np.isfinite(constraint.rhs):
            raise ValueError("Constraint right-hand sides must be finite")

    def add_constraint(self, row: Sequence[float], relation: Relation, rhs: float) -> None:
        constraint = Constraint(tuple(float(v) for v in row), Relation(relation), float(rhs))
        self._check_row(constraint)
        self.constraints.append(constraint)


@dataclass
class LpSolution:
    """Outcome of solve(); point and value are meaningful only when Optimal."""
    status: LpStatus
    value: float
    point: np.ndarray
    iterations: int = 0
    used_bland: bool = False

    @property
    def optimal(self) -> bool:
        return self.status == LpStatus.OPTIMAL


def _substitution(bounds: List[Bound]) -> Tuple[np.ndarray, np.ndarray, List[Tuple[int, float]]]:
    """
    Express every original variable through nonnegative ones: x = offset + T y.

    Returns:
        (T, offset, upper) where upper lists (column, limit) rows y_col <= limit
    """
    columns: List[np.ndarray] = []
    offset = np.zeros(len(bounds))
    upper: List[Tuple[int, float]] = []
    n = len(bounds)
    for j, (lo, hi) in enumerate(bounds):
        unit = np.zeros(n)
        unit[j] = 1.0
        if lo is not None:
            offset[j] = lo
            columns.append(unit)
            if hi is not None:
                # hi < lo yields a negative limit, which phase one reports infeasible
                upper.append((len(columns) - 1, hi - lo))
        elif hi is not None:
            offset[j] = hi
            columns.append(-unit)
        else:
            columns.append(unit)
            columns.append(-unit)
    transform = np.column_stack(columns) if columns else np.zeros((n, 0))
    return transform, offset, upper


def _pivot(tableau: np.ndarray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])
    tableau[np.abs(tableau) < 1e-14] = 0.0


class _Tableau:
    """Canonical-form tableau [B^-1 A | B^-1 b] with its basis."""

    def __init__(self, matrix: np.ndarray, rhs: np.ndarray, basis: List[int]):
        self.data = np.column_stack([matrix, rhs])
        self.basis = list(basis)
        self.iterations = 0
        self.used_bland = False

    @property
    def width(self) -> int:
        return self.data.shape[1] - 1

    def run(self, cost: np.ndarray, bland_after: int) -> bool:
        """
        Maximize cost . y from the current basic feasible solution.

        Returns:
            False if the program is unbounded, True at optimality
        """
        while True:
            if self.iterations >= MAX_ITERATIONS:
                raise NumericalError(f"Simplex did not terminate after {MAX_ITERATIONS} pivots")
            reduced = cost - cost[self.basis] @ self.data[:, :-1]
            reduced[self.basis] = 0.0
            candidates = np.flatnonzero(reduced > PIVOT_TOL)
            if candidates.size == 0:
                return True
            bland = self.iterations >= bland_after
            if bland and not self.used_bland:
                logger.warning(f"Simplex switching to Bland's rule after {self.iterations} pivots")
                self.used_bland = True
            col = int(candidates[0]) if bland else int(candidates[np.argmax(reduced[candidates])])
            column = self.data[:, col]
            rows = np.flatnonzero(column > PIVOT_TOL)
            if rows.size == 0:
                return False
            ratios = self.data[rows, -1] / column[rows]
            best = ratios.min()
            ties = rows[ratios <= best + PIVOT_TOL]
            row = int(min(ties, key=lambda r: self.basis[r]))
            _pivot(self.data, row, col)
            self.basis[row] = col
            self.iterations += 1

    def point(self) -> np.ndarray:
        y = np.zeros(self.width)
        y[self.basis] = self.data[:, -1]
        return y


def solve(lp: LinearProgram) -> LpSolution:
    """
    Solve a linear program with a deterministic two-phase simplex.

    Largest-coefficient pricing runs for a fixed budget, after which Bland's
    rule takes over so that degenerate cycles terminate.

    Args:
        lp: The program (maximization)

    Returns:
        LpSolution with status Optimal, Infeasible or Unbounded

    Raises:
        SizeLimit: beyond MAX_VARIABLES variables or MAX_CONSTRAINTS constraints
        NumericalError: if pivoting fails to terminate
    """
    n = lp.num_variables
    if n > MAX_VARIABLES or len(lp.constraints) > MAX_CONSTRAINTS:
        raise SizeLimit(
            f"LP with {n} variables and {len(lp.constraints)} constraints exceeds "
            f"caps ({MAX_VARIABLES}, {MAX_CONSTRAINTS})"
        )

    transform, offset, upper = _substitution(lp.bounds)
    width = transform.shape[1]

    rows: List[np.ndarray] = []
    rhs: List[float] = []
    relations: List[Relation] = []

    def add_row(row: np.ndarray, relation: Relation, value: float) -> None:
        if value < 0:
            row, value = -row, -value
            relation = {Relation.LE: Relation.GE, Relation.GE: Relation.LE}[relation]
        rows.append(row)
        rhs.append(value)
        relations.append(relation)

    for c in lp.constraints:
        a = np.asarray(c.row, dtype=float)
        row = a @ transform
        value = c.rhs - float(a @ offset)
        if c.relation == Relation.EQ:
            add_row(row.copy(), Relation.LE, value)
            add_row(row.copy(), Relation.GE, value)
        else:
            add_row(row, c.relation, value)
    for col, limit in upper:
        row = np.zeros(width)
        row[col] = 1.0
        add_row(row, Relation.LE, limit)

    m = len(rows)
    cost = lp.objective @ transform if width else np.zeros(0)
    if m == 0:
        if np.any(cost > PIVOT_TOL):
            return LpSolution(LpStatus.UNBOUNDED, float("inf"), np.full(n, np.nan))
        return LpSolution(LpStatus.OPTIMAL, float(lp.objective @ offset), offset.copy())

    le = [i for i, r in enumerate(relations) if r == Relation.LE]
    ge = [i for i, r in enumerate(relations) if r == Relation.GE]
    total = width + len(le) + 2 * len(ge)
    matrix = np.zeros((m, total))
    matrix[:, :width] = np.array(rows)
    basis = [0] * m
    col = width
    for i in le:
        matrix[i, col] = 1.0
        basis[i] = col
        col += 1
    for i in ge:
        matrix[i, col] = -1.0
        col += 1
    artificial_start = col
    for i in ge:
        matrix[i, col] = 1.0
        basis[i] = col
        col += 1

    tableau = _Tableau(matrix, np.array(rhs, dtype=float), basis)
    bland_after = 10 * (m + total)

    if ge:
        phase_one = np.zeros(total)
        phase_one[artificial_start:] = -1.0
        tableau.run(phase_one, bland_after)
        infeasibility = -float(phase_one[tableau.basis] @ tableau.data[:, -1])
        scale = max(1.0, float(np.max(np.abs(rhs))))
        if infeasibility > FEASIBILITY_TOL * scale:
            logger.debug(f"LP infeasible: phase one residual {infeasibility:.3e}")
            return LpSolution(LpStatus.INFEASIBLE, float("nan"), np.full(n, np.nan),
                              tableau.iterations, tableau.used_bland)
        _drive_out_artificials(tableau, artificial_start)

    phase_two = np.zeros(tableau.width)
    phase_two[:width] = cost
    if not tableau.run(phase_two, bland_after):
        return LpSolution(LpStatus.UNBOUNDED, float("inf"), np.full(n, np.nan),
                          tableau.iterations, tableau.used_bland)

    y = tableau.point()[:width]
    x = offset + transform @ y
    return LpSolution(LpStatus.OPTIMAL, float(lp.objective @ x), x,
                      tableau.iterations, tableau.used_bland)


def _drive_out_artificials(tableau: _Tableau, artificial_start: int) -> None:
    """Pivot basic artificials out, drop redundant rows, then drop artificial columns."""
    keep = []
    for r in range(len(tableau.basis)):
        if tableau.basis[r] < artificial_start:
            keep.append(r)
            continue
        candidates = np.flatnonzero(np.abs(tableau.data[r, :artificial_start]) > PIVOT_TOL)
        if candidates.size == 0:
            continue
        col = int(candidates[0])
        _pivot(tableau.data, r, col)
        tableau.basis[r] = col
        keep.append(r)
    tableau.data = np.delete(tableau.data[keep], np.s_[artificial_start:-1], axis=1)
    tableau.basis = [tableau.basis[r] for r in keep]
