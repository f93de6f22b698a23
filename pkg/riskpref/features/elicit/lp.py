"""
Dense two-phase simplex.

Tableau method with Bland's anti-cycling rule. Phase I minimizes the sum
of artificial variables; the problem is feasible iff that optimum is at
most `lp_feasibility_tolerance`. Phase II minimizes the objective from the
Phase-I basis. Free variables are split into positive and negative parts.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from riskpref.config import settings
from riskpref.core.exceptions import DimensionMismatchError, InputValidationError, SolverStallError
from riskpref.core.logging_config import get_logger
from riskpref.core.metrics import lp_pivots_total, lp_solves_total

logger = get_logger(__name__)

SENSES = (">=", "=", "<=")


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPProblem:
    """
    minimize objective @ x  subject to  matrix @ x (senses) rhs.

    `nonnegative[j]` restricts x_j >= 0; other variables are free.
    """

    matrix: np.ndarray
    senses: tuple[str, ...]
    rhs: np.ndarray
    nonnegative: tuple[bool, ...]
    objective: np.ndarray

    @classmethod
    def create(
        cls,
        matrix,
        senses,
        rhs,
        nonnegative=None,
        objective=None,
    ) -> "LPProblem":
        """
        Validate shapes and entries.

        Raises:
            DimensionMismatchError: Inconsistent shapes
            InputValidationError: Non-finite entries or unknown senses
        """
        A = np.atleast_2d(np.asarray(matrix, dtype=float))
        b = np.asarray(rhs, dtype=float).reshape(-1)
        m, n = A.shape
        sense_tuple = tuple(senses)
        if len(sense_tuple) != m or b.shape[0] != m:
            raise DimensionMismatchError(
                f"matrix has {m} rows but {len(sense_tuple)} senses and {b.shape[0]} right-hand sides"
            )
        for i, sense in enumerate(sense_tuple):
            if sense not in SENSES:
                raise InputValidationError(f"senses[{i}]: unknown sense {sense!r}", {"index": i})
        signs = tuple(nonnegative) if nonnegative is not None else (True,) * n
        c = np.asarray(objective, dtype=float).reshape(-1) if objective is not None else np.zeros(n)
        if len(signs) != n or c.shape[0] != n:
            raise DimensionMismatchError(
                f"matrix has {n} columns but {len(signs)} sign flags and {c.shape[0]} costs"
            )
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b)) and np.all(np.isfinite(c))):
            raise InputValidationError("LP entries must be finite")
        return cls(A, sense_tuple, b, signs, c)

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


@dataclass(frozen=True)
class LPOutcome:
    status: LPStatus
    phase_one_value: float
    iterations: int
    x: np.ndarray | None = None
    objective_value: float | None = None

    @property
    def feasible(self) -> bool:
        return self.status is not LPStatus.INFEASIBLE


class _Tableau:
    """Mutable simplex tableau: constraint rows, objective row last, rhs column last."""

    def __init__(self, T: np.ndarray, basis: list[int], tol: float, budget: int):
        self.T = T
        self.basis = basis
        self.tol = tol
        self.budget = budget
        self.iterations = 0

    def pivot(self, row: int, col: int) -> None:
        T = self.T
        T[row] = T[row] / T[row, col]
        factors = T[:, col].copy()
        factors[row] = 0.0
        T -= np.outer(factors, T[row])
        self.basis[row] = col

    def set_objective(self, costs: np.ndarray) -> None:
        row = np.zeros(self.T.shape[1])
        row[: costs.shape[0]] = costs
        for r, j in enumerate(self.basis):
            if row[j] != 0.0:
                row -= row[j] * self.T[r]
        self.T[-1] = row

    def _entering(self, allowed: int) -> int:
        reduced = self.T[-1, :allowed]
        candidates = np.flatnonzero(reduced < -self.tol)
        return int(candidates[0]) if candidates.size else -1

    def _leaving(self, col: int) -> int:
        column = self.T[:-1, col]
        rows = np.flatnonzero(column > self.tol)
        if rows.size == 0:
            return -1
        ratios = self.T[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + self.tol]
        return int(min(ties, key=lambda r: self.basis[r]))

    def run(self, allowed: int, phase: str) -> bool:
        """Iterate to optimality; False when unbounded."""
        pivots = 0
        try:
            while True:
                col = self._entering(allowed)
                if col < 0:
                    return True
                row = self._leaving(col)
                if row < 0:
                    return False
                self.pivot(row, col)
                pivots += 1
                self.iterations += 1
                if self.iterations > self.budget:
                    raise SolverStallError(
                        f"simplex exceeded {self.budget} iterations",
                        {"phase": phase, "iterations": self.iterations},
                    )
        finally:
            lp_pivots_total.labels(phase=phase).inc(pivots)

    def drop_artificial(self, first_artificial: int) -> None:
        """
        Pivot basic artificials out, discarding redundant rows, then drop their columns.

        A basic artificial left after a feasible Phase I sits at zero within
        tolerance; its rhs is set to exactly zero so that a pivot on an entry
        of either sign keeps every rhs nonnegative.
        """
        r = 0
        while r < len(self.basis):
            if self.basis[r] >= first_artificial:
                self.T[r, -1] = 0.0
                row = self.T[r, :first_artificial]
                candidates = np.flatnonzero(np.abs(row) > self.tol)
                if candidates.size:
                    self.pivot(r, int(candidates[0]))
                else:
                    self.T = np.delete(self.T, r, axis=0)
                    del self.basis[r]
                    continue
            r += 1
        self.T = np.delete(self.T, np.s_[first_artificial:-1], axis=1)


def _standard_form(problem: LPProblem) -> tuple[np.ndarray, list[str], np.ndarray, np.ndarray, list[int]]:
    """Split free variables and make every right-hand side nonnegative."""
    columns: list[np.ndarray] = []
    costs: list[float] = []
    negative_of: list[int] = []
    for j in range(problem.shape[1]):
        columns.append(problem.matrix[:, j])
        costs.append(problem.objective[j])
    for j, nonneg in enumerate(problem.nonnegative):
        if not nonneg:
            columns.append(-problem.matrix[:, j])
            costs.append(-problem.objective[j])
            negative_of.append(j)
    A = np.column_stack(columns) if columns else np.zeros((problem.shape[0], 0))
    b = problem.rhs.copy()
    senses = list(problem.senses)
    flip = {">=": "<=", "<=": ">=", "=": "="}
    for i in range(A.shape[0]):
        if b[i] < 0:
            A[i] = -A[i]
            b[i] = -b[i]
            senses[i] = flip[senses[i]]
    return A, senses, b, np.asarray(costs, dtype=float), negative_of


def lp_solve(problem: LPProblem) -> LPOutcome:
    """
    Solve an LP by the two-phase simplex method.

    Deterministic for fixed input.

    Raises:
        SolverStallError: Iteration cap exceeded
    """
    tol = settings.lp_pivot_tolerance
    A, senses, b, costs, negative_of = _standard_form(problem)
    m, n = A.shape

    slack_entries: list[tuple[int, float]] = []
    basis = [-1] * m
    for i, sense in enumerate(senses):
        if sense == "<=":
            basis[i] = n + len(slack_entries)
            slack_entries.append((i, 1.0))
        elif sense == ">=":
            slack_entries.append((i, -1.0))
    first_artificial = n + len(slack_entries)
    artificial_rows = [i for i, sense in enumerate(senses) if sense != "<="]

    width = first_artificial + len(artificial_rows)
    T = np.zeros((m + 1, width + 1))
    T[:m, :n] = A
    for k, (i, coef) in enumerate(slack_entries):
        T[i, n + k] = coef
    for k, i in enumerate(artificial_rows):
        T[i, first_artificial + k] = 1.0
        basis[i] = first_artificial + k
    T[:m, -1] = b

    tableau = _Tableau(T, basis, tol, settings.lp_max_iterations)

    phase_one_value = 0.0
    if artificial_rows:
        phase_one_costs = np.zeros(width)
        phase_one_costs[first_artificial:] = 1.0
        tableau.set_objective(phase_one_costs)
        tableau.run(width, "phase_one")
        phase_one_value = max(-float(tableau.T[-1, -1]), 0.0)
        if phase_one_value > settings.lp_feasibility_tolerance:
            lp_solves_total.labels(outcome=LPStatus.INFEASIBLE.value).inc()
            logger.info(
                "lp_solved",
                status=LPStatus.INFEASIBLE.value,
                phase_one_value=phase_one_value,
                iterations=tableau.iterations,
                rows=m,
                columns=n,
            )
            return LPOutcome(LPStatus.INFEASIBLE, phase_one_value, tableau.iterations)
        tableau.drop_artificial(first_artificial)

    tableau.set_objective(costs)
    bounded = tableau.run(first_artificial, "phase_two")
    status = LPStatus.OPTIMAL if bounded else LPStatus.UNBOUNDED

    x_std = np.zeros(n)
    for r, j in enumerate(tableau.basis):
        if j < n:
            x_std[j] = tableau.T[r, -1]
    x_std = np.where(x_std < 0, 0.0, x_std)

    original = problem.shape[1]
    x = x_std[:original].copy()
    for k, j in enumerate(negative_of):
        x[j] -= x_std[original + k]
    objective_value = float(problem.objective @ x)

    lp_solves_total.labels(outcome=status.value).inc()
    logger.info(
        "lp_solved",
        status=status.value,
        phase_one_value=phase_one_value,
        iterations=tableau.iterations,
        rows=m,
        columns=n,
    )
    return LPOutcome(status, phase_one_value, tableau.iterations, x, objective_value)
