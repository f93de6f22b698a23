"""
Preference elicitation by linear separation.

A dataset admits a numerical representation of the required form exactly
when a linear functional is >= 1 on every strict difference and 0 on every
indifference difference (any positive margin rescales to 1). Both modes
build that feasibility problem and hand it to the simplex solver.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from riskpref.config import settings
from riskpref.core.exceptions import MalformedDatasetError
from riskpref.core.logging_config import get_logger
from riskpref.core.metrics import elicitations_total
from riskpref.core.numeric import Number, to_exact
from riskpref.core.performance import PerformanceMonitor
from riskpref.features.du.service import rdu_evaluate
from riskpref.features.elicit.lp import LPOutcome, LPProblem, lp_solve
from riskpref.features.eu.service import eu_evaluate
from riskpref.features.measure.service import signed_difference
from riskpref.features.quantile.service import evaluate, merged_grid
from riskpref.models.distortion import DistortionFunction
from riskpref.models.measure import OutcomePoint
from riskpref.models.preference import (
    Comparison,
    ElicitationMode,
    PreferenceDataset,
    Relation,
)
from riskpref.models.utility import UtilityFunction

logger = get_logger(__name__)

Witness = UtilityFunction | DistortionFunction


@dataclass(frozen=True)
class ElicitationResult:
    """
    Outcome of an elicitation run.

    `signed_feasible` is set for infeasible dual runs: whether a
    representation exists once the distortion increments may be negative.
    """

    mode: ElicitationMode
    feasible: bool
    witness: Witness | None
    phase_one_value: float
    grid_size: int
    signed_feasible: bool | None = None


def _constraint_system(
    rows: list[np.ndarray], comparisons: tuple[Comparison, ...]
) -> tuple[np.ndarray, list[str], np.ndarray]:
    senses = [">=" if c.relation is Relation.SUCC else "=" for c in comparisons]
    rhs = np.array([1.0 if c.relation is Relation.SUCC else 0.0 for c in comparisons])
    return np.vstack(rows), senses, rhs


def _grid_utility(grid: list[OutcomePoint], values: Iterable[Number]) -> UtilityFunction:
    # scalar witnesses interpolate linearly between grid points
    u = UtilityFunction.table(grid, values)
    return u.as_piecewise_linear() if u.dim == 1 else u


class ElicitationService:
    """Expected-utility and dual-utility elicitation."""

    @staticmethod
    def outcome_grid(data: PreferenceDataset) -> list[OutcomePoint]:
        """Union of the supports of all prospects, sorted."""
        points: set[OutcomePoint] = set()
        for mu in data.prospects:
            points.update(mu.points)
        return sorted(points)

    @staticmethod
    def run_eu_elicitation(data: PreferenceDataset) -> ElicitationResult:
        """
        Find grid utilities u with sum_k u(z_k)(mu - nu){z_k} >= 1 for every
        mu > nu and = 0 for every mu ~ nu.

        The L1 norm of u is minimized (u = u+ - u-), which keeps the
        witness bounded and deterministic.

        Raises:
            MalformedDatasetError: Dataset not in eu mode
        """
        if data.mode is not ElicitationMode.EU:
            raise MalformedDatasetError("expected-utility elicitation needs an eu dataset")
        grid = ElicitationService.outcome_grid(data)
        index = {p: k for k, p in enumerate(grid)}

        with PerformanceMonitor("elicit", mode="eu", comparisons=len(data.comparisons)):
            if not data.comparisons:
                witness = _grid_utility(grid, [0] * len(grid))
                return ElicitationService._record(
                    ElicitationResult(ElicitationMode.EU, True, witness, 0.0, len(grid))
                )

            rows = []
            for comp in data.comparisons:
                row = np.zeros(len(grid))
                diff = signed_difference(data.prospects[comp.left], data.prospects[comp.right])
                if diff is not None:
                    for atom in diff.atoms:
                        row[index[atom.point]] = float(atom.mass)
                rows.append(row)
            R, senses, rhs = _constraint_system(rows, data.comparisons)
            problem = LPProblem.create(
                np.hstack([R, -R]),
                senses,
                rhs,
                objective=np.ones(2 * len(grid)),
            )
            outcome = lp_solve(problem)
            witness = None
            if outcome.feasible:
                half = len(grid)
                values = outcome.x[:half] - outcome.x[half:]
                witness = _grid_utility(grid, [float(v) for v in values])
            return ElicitationService._record(
                ElicitationResult(
                    ElicitationMode.EU,
                    outcome.feasible,
                    witness,
                    outcome.phase_one_value,
                    len(grid),
                )
            )

    @staticmethod
    def run_dual_elicitation(data: PreferenceDataset) -> ElicitationResult:
        """
        Find increments dw_j >= 0 on the merged level grid with
        sum_j (phi_j - psi_j) dw_j >= 1 for every phi > psi and = 0 for
        every phi ~ psi.

        The total mass w(1) is minimized. When no monotone distortion exists,
        a relaxed run with free increments tells whether any signed linear
        representation exists at all.

        Raises:
            MalformedDatasetError: Dataset not in dual mode
        """
        if data.mode is not ElicitationMode.DUAL:
            raise MalformedDatasetError("dual elicitation needs a dual dataset")
        grid = merged_grid(*data.prospects)

        with PerformanceMonitor("elicit", mode="dual", comparisons=len(data.comparisons)):
            if not data.comparisons:
                witness = DistortionFunction.from_increments(grid, [0] * len(grid))
                return ElicitationService._record(
                    ElicitationResult(ElicitationMode.DUAL, True, witness, 0.0, len(grid))
                )

            cells = [np.array([float(evaluate(phi, p)) for p in grid]) for phi in data.prospects]
            rows = [cells[c.left] - cells[c.right] for c in data.comparisons]
            R, senses, rhs = _constraint_system(rows, data.comparisons)
            outcome = lp_solve(
                LPProblem.create(R, senses, rhs, objective=np.ones(len(grid)))
            )
            if outcome.feasible:
                witness = DistortionFunction.from_increments(grid, [float(v) for v in outcome.x])
                return ElicitationService._record(
                    ElicitationResult(
                        ElicitationMode.DUAL, True, witness, outcome.phase_one_value, len(grid)
                    )
                )

            relaxed: LPOutcome = lp_solve(
                LPProblem.create(R, senses, rhs, nonnegative=[False] * len(grid))
            )
            return ElicitationService._record(
                ElicitationResult(
                    ElicitationMode.DUAL,
                    False,
                    None,
                    outcome.phase_one_value,
                    len(grid),
                    signed_feasible=relaxed.feasible,
                )
            )

    @staticmethod
    def _record(result: ElicitationResult) -> ElicitationResult:
        outcome = "feasible" if result.feasible else "infeasible"
        elicitations_total.labels(mode=result.mode.value, outcome=outcome).inc()
        logger.info(
            "elicitation_completed",
            mode=result.mode.value,
            feasible=result.feasible,
            phase_one_value=result.phase_one_value,
            grid_size=result.grid_size,
            signed_feasible=result.signed_feasible,
        )
        return result

    @staticmethod
    def comparison_gaps(data: PreferenceDataset, witness: Witness) -> list[Fraction]:
        """U(left) - U(right) for every comparison under the witness."""
        if isinstance(witness, UtilityFunction):
            utilities = [eu_evaluate(witness, mu) for mu in data.prospects]
        else:
            utilities = [rdu_evaluate(witness, phi) for phi in data.prospects]
        return [utilities[c.left] - utilities[c.right] for c in data.comparisons]

    @staticmethod
    def reproduces(
        data: PreferenceDataset,
        witness: Witness,
        margin: float = 1.0,
        tolerance: float | None = None,
    ) -> bool:
        """
        True iff the witness reproduces every comparison: strict gaps at
        least `margin - tolerance`, indifference gaps at most `tolerance`.
        """
        tol = to_exact(tolerance if tolerance is not None else settings.reproduce_tolerance)
        floor = to_exact(margin) - tol
        gaps = ElicitationService.comparison_gaps(data, witness)
        return all(
            gap >= floor if c.relation is Relation.SUCC else abs(gap) <= tol
            for c, gap in zip(data.comparisons, gaps)
        )


# Singleton instance
elicitation_service = ElicitationService()


def elicit_eu(data: PreferenceDataset) -> UtilityFunction | None:
    """Grid utility table representing the dataset, or None."""
    return elicitation_service.run_eu_elicitation(data).witness


def elicit_dual(data: PreferenceDataset) -> DistortionFunction | None:
    """Unnormalized distortion representing the dataset, or None."""
    return elicitation_service.run_dual_elicitation(data).witness
