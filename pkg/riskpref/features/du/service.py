"""
Dual (rank-dependent) utility.

Evaluation only ever uses increments w(p_i) - w(p_{i-1}) of the distortion;
no density of w is formed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from riskpref.config import settings
from riskpref.core.exceptions import InputValidationError, NormalizationError
from riskpref.core.logging_config import get_logger
from riskpref.core.numeric import Number, to_exact, to_exact_tuple
from riskpref.features.measure.service import cdf, quantile_of_variable
from riskpref.features.quantile.service import (
    coarsen_quantile,
    comonotonic_combine,
    mean_quantile,
)
from riskpref.models.distortion import DistortionFunction
from riskpref.models.measure import DiscreteMeasure, FiniteRandomVariable
from riskpref.models.quantile import StepQuantile
from riskpref.models.utility import UtilityFunction

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class DualRiskAversionResult:
    u_coarse: Fraction
    u_fine: Fraction
    ok: bool


@dataclass(frozen=True, slots=True)
class ConcavityCounterexample:
    """Witness that a non-concave distortion prefers a prospect to its coarsening."""

    p1: Fraction
    p2: Fraction
    p3: Fraction
    phi: StepQuantile
    betas: tuple[Fraction, ...]
    violation: Fraction


def _require_normalized(w: DistortionFunction) -> None:
    if not w.is_normalized:
        raise NormalizationError(
            "operation needs a normalized distortion with w(1) = 1",
            {"w(1)": float(w.total)},
        )


def _candidate_triples(w: DistortionFunction) -> Iterable[tuple[Fraction, Fraction, Fraction]]:
    knots = w.knots
    for j in range(1, len(knots) - 1):
        lower, q, upper = knots[j - 1], knots[j], knots[j + 1]
        lefts = [p for p in (lower, (lower + q) / 2) if p > 0]
        rights = [p for p in (upper, (q + upper) / 2) if p < 1]
        for p1 in lefts:
            for p3 in rights:
                yield p1, q, p3


class DualService:
    """Dual (rank-dependent) utility, the Choquet form and risk attitude."""

    @staticmethod
    def rdu_evaluate(w: DistortionFunction, phi: StepQuantile) -> Fraction:
        """U(phi) = sum of z_i * [w(p_i) - w(p_{i-1})]."""
        return sum(
            (z * (w(right) - w(left)) for left, right, z in phi.segments()),
            Fraction(0),
        )

    @staticmethod
    def rdu_of_variable(w: DistortionFunction, z: FiniteRandomVariable) -> Fraction:
        """Dual utility of a random variable through its law."""
        return DualService.rdu_evaluate(w, quantile_of_variable(z))

    @staticmethod
    def choquet_evaluate(w: DistortionFunction, mu: DiscreteMeasure) -> Fraction:
        """
        -integral_{-inf}^0 w(F(z)) dz + integral_0^inf [1 - w(F(z))] dz.

        F is a step function, so both integrands are constant between
        consecutive breakpoints (atoms and 0) and the integrals are finite sums.

        Raises:
            NormalizationError: w(1) != 1
            UnsupportedKindError: Signed or multi-dimensional measure
        """
        _require_normalized(w)
        mu.require_probability()
        grid = sorted(set(mu.scalar_points()) | {Fraction(0)})
        total = Fraction(0)
        for a, b in zip(grid, grid[1:]):
            level = w(cdf(mu, a))
            if b <= 0:
                total -= level * (b - a)
            else:
                total += (1 - level) * (b - a)
        return total

    @staticmethod
    def anticipated_utility(
        u: UtilityFunction, w: DistortionFunction, phi: StepQuantile
    ) -> Fraction:
        """
        U(phi) = sum of u(z_i) * [w(p_i) - w(p_{i-1})].

        Raises:
            EvaluationDomainError: A quantile value outside u's domain
        """
        return sum(
            (u(z) * (w(right) - w(left)) for left, right, z in phi.segments()),
            Fraction(0),
        )

    @staticmethod
    def comonotonic_additivity_residual(
        w: DistortionFunction,
        phi: StepQuantile,
        psi: StepQuantile,
        alpha: Number,
        beta: Number,
    ) -> Fraction:
        """|U(alpha phi + beta psi) - alpha U(phi) - beta U(psi)|."""
        a = to_exact(alpha, "alpha")
        b = to_exact(beta, "beta")
        combined = DualService.rdu_evaluate(w, comonotonic_combine(a, phi, b, psi))
        separate = a * DualService.rdu_evaluate(w, phi) + b * DualService.rdu_evaluate(w, psi)
        return abs(combined - separate)

    @staticmethod
    def dual_risk_aversion_check(
        w: DistortionFunction,
        phi: StepQuantile,
        betas: Iterable[Number],
        tolerance: float | None = None,
    ) -> DualRiskAversionResult:
        """
        Compare U(phi_G) with U(phi) for the coarsening at `betas`.

        Raises:
            LevelNotReachableError: Propagated from coarsen_quantile
        """
        tol = to_exact(tolerance if tolerance is not None else settings.evaluator_tolerance)
        u_coarse = DualService.rdu_evaluate(w, coarsen_quantile(phi, betas))
        u_fine = DualService.rdu_evaluate(w, phi)
        return DualRiskAversionResult(u_coarse, u_fine, u_coarse >= u_fine - tol)

    @staticmethod
    def two_point_prospect(p: Number) -> StepQuantile:
        """Mass p at 0 and mass 1 - p at 1."""
        q = to_exact(p, "p")
        if not 0 <= q <= 1:
            raise InputValidationError("p must lie in [0, 1]")
        if q == 0:
            return StepQuantile.constant(1)
        if q == 1:
            return StepQuantile.constant(0)
        return StepQuantile((q, Fraction(1)), (Fraction(0), Fraction(1)))

    @staticmethod
    def four_point_prospect(
        p1: Number, p2: Number, p3: Number
    ) -> tuple[StepQuantile, tuple[Fraction, ...]]:
        """
        Quantile with values -3, -2, -1, 0 at levels p1, p2, p3, 1 and the
        coarsening levels {p1, p3, 1} that merge the two middle atoms.

        Raises:
            InputValidationError: Unless 0 < p1 < p2 < p3 < 1
        """
        a, b, c = to_exact_tuple((p1, p2, p3), "p")
        if not 0 < a < b < c < 1:
            raise InputValidationError("four-point prospect needs 0 < p1 < p2 < p3 < 1")
        phi = StepQuantile(
            (a, b, c, Fraction(1)),
            (Fraction(-3), Fraction(-2), Fraction(-1), Fraction(0)),
        )
        return phi, (a, c, Fraction(1))

    @staticmethod
    def concavity_counterexample(
        w: DistortionFunction, margin: float | None = None
    ) -> ConcavityCounterexample | None:
        """
        Build the four-point counterexample for a non-concave distortion.

        Scans p2 over the interior knots and p1, p3 over the neighbouring knots
        and midpoints; a piecewise-linear w that is not concave has a convex
        kink at some knot, where this scan finds a triple with
        w(p1)(p3-p2)/(p3-p1) + w(p3)(p2-p1)/(p3-p1) > w(p2).
        Returns None for concave w.
        """
        if w.is_concave:
            return None
        eps = to_exact(margin if margin is not None else settings.counterexample_margin)
        for p1, p2, p3 in _candidate_triples(w):
            chord = (w(p1) * (p3 - p2) + w(p3) * (p2 - p1)) / (p3 - p1)
            if chord - w(p2) > eps:
                phi, betas = DualService.four_point_prospect(p1, p2, p3)
                coarse = coarsen_quantile(phi, betas)
                violation = DualService.rdu_evaluate(w, phi) - DualService.rdu_evaluate(w, coarse)
                logger.debug(
                    "counterexample_found",
                    p1=float(p1),
                    p2=float(p2),
                    p3=float(p3),
                    violation=float(violation),
                )
                return ConcavityCounterexample(p1, p2, p3, phi, betas, violation)
        return None

    @staticmethod
    def mean_preference_check(w: DistortionFunction) -> bool:
        """
        True iff the constant-mean prospect is weakly preferred to every prospect.

        Equivalent to w(p) >= p for all p, checked exactly at the knots.

        Raises:
            NormalizationError: w(1) != 1
        """
        _require_normalized(w)
        return w.dominates_identity

    @staticmethod
    def prefers_mean(
        w: DistortionFunction, phi: StepQuantile, tolerance: float | None = None
    ) -> bool:
        """Empirical side of the mean-preference equivalence for one prospect."""
        tol = to_exact(tolerance if tolerance is not None else settings.evaluator_tolerance)
        at_mean = DualService.rdu_evaluate(w, mean_quantile(phi))
        return at_mean >= DualService.rdu_evaluate(w, phi) - tol


# Singleton instance
dual_service = DualService()

rdu_evaluate = dual_service.rdu_evaluate
rdu_of_variable = dual_service.rdu_of_variable
choquet_evaluate = dual_service.choquet_evaluate
anticipated_utility = dual_service.anticipated_utility
comonotonic_additivity_residual = dual_service.comonotonic_additivity_residual
dual_risk_aversion_check = dual_service.dual_risk_aversion_check
two_point_prospect = dual_service.two_point_prospect
four_point_prospect = dual_service.four_point_prospect
concavity_counterexample = dual_service.concavity_counterexample
mean_preference_check = dual_service.mean_preference_check
prefers_mean = dual_service.prefers_mean
