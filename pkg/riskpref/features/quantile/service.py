"""
Operations on step quantile functions.

All computations run on the merged level grid of the operands, so they are
exact piecewise sums rather than numerical quadrature.
"""

from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable

from riskpref.core.exceptions import (
    InputValidationError,
    LevelNotReachableError,
    NegativeCoefficientError,
)
from riskpref.core.logging_config import get_logger
from riskpref.core.numeric import Number, to_exact, to_exact_tuple
from riskpref.features.measure.service import from_quantile
from riskpref.models.measure import DiscreteMeasure
from riskpref.models.quantile import StepQuantile

logger = get_logger(__name__)


def _pointwise_gaps(phi: StepQuantile, psi: StepQuantile) -> Iterable[tuple[Fraction, Fraction]]:
    left = Fraction(0)
    for p in QuantileService.merged_grid(phi, psi):
        yield p - left, abs(QuantileService.evaluate(phi, p) - QuantileService.evaluate(psi, p))
        left = p


class QuantileService:
    """Operations on step quantile functions."""

    @staticmethod
    def evaluate(phi: StepQuantile, p: Number) -> Fraction:
        """
        Left-continuous evaluation: z_i for p in (p_{i-1}, p_i].

        Raises:
            InputValidationError: p outside (0, 1]
        """
        q = to_exact(p, "p")
        if not 0 < q <= 1:
            raise InputValidationError(f"p must lie in (0, 1], got {float(q)}")
        return phi.values[bisect_left(phi.levels, q)]

    @staticmethod
    def inverse(phi: StepQuantile) -> DiscreteMeasure:
        """The distribution whose quantile is phi; pair with `inverse_at` for values."""
        return from_quantile(phi)

    @staticmethod
    def inverse_at(phi: StepQuantile, z: Number) -> Fraction:
        """F(z) = sup{p in [0, 1] : phi(p) <= z}, and 0 when no such p exists."""
        k = bisect_right(phi.values, to_exact(z, "z"))
        return phi.levels[k - 1] if k > 0 else Fraction(0)

    @staticmethod
    def merged_grid(*quantiles: StepQuantile) -> list[Fraction]:
        """Sorted union of the level grids."""
        levels: set[Fraction] = set()
        for phi in quantiles:
            levels.update(phi.levels)
        return sorted(levels)

    @staticmethod
    def comonotonic_combine(
        alpha: Number, phi: StepQuantile, beta: Number, psi: StepQuantile
    ) -> StepQuantile:
        """
        Pointwise alpha*phi + beta*psi, the quantile of a comonotonic sum.

        Raises:
            NegativeCoefficientError: alpha or beta negative
        """
        a = to_exact(alpha, "alpha")
        b = to_exact(beta, "beta")
        if a < 0 or b < 0:
            raise NegativeCoefficientError(
                "comonotonic combination needs nonnegative coefficients",
                {"alpha": float(a), "beta": float(b)},
            )
        grid = QuantileService.merged_grid(phi, psi)
        values = [
            a * QuantileService.evaluate(phi, p) + b * QuantileService.evaluate(psi, p)
            for p in grid
        ]
        return StepQuantile.canonical(grid, values)

    @staticmethod
    def l1_distance(phi: StepQuantile, psi: StepQuantile) -> Fraction:
        """Integral of |phi - psi| over (0, 1]."""
        return sum((width * gap for width, gap in _pointwise_gaps(phi, psi)), Fraction(0))

    @staticmethod
    def sup_distance(phi: StepQuantile, psi: StepQuantile) -> Fraction:
        """Supremum of |phi - psi| over (0, 1]."""
        return max(gap for _, gap in _pointwise_gaps(phi, psi))

    @staticmethod
    def integral(phi: StepQuantile) -> Fraction:
        """Integral of phi over (0, 1], the mean of the underlying distribution."""
        return sum(((right - left) * z for left, right, z in phi.segments()), Fraction(0))

    @staticmethod
    def mean_quantile(phi: StepQuantile) -> StepQuantile:
        """Constant quantile at the mean: the coarsening by the trivial partition."""
        return StepQuantile.constant(QuantileService.integral(phi))

    @staticmethod
    def coarsen_quantile(phi: StepQuantile, betas: Iterable[Number]) -> StepQuantile:
        """
        Replace phi on every block (beta_{j-1}, beta_j] by its block average.

        The partial integrals of phi at every beta are preserved exactly.

        Raises:
            LevelNotReachableError: A beta that is not a level of phi
            InputValidationError: Betas not strictly increasing or not ending at 1
        """
        bs = to_exact_tuple(betas, "betas")
        if not bs or bs[-1] != 1:
            raise InputValidationError("betas must end at 1")
        reachable = set(phi.levels)
        for j, beta in enumerate(bs):
            if j and beta <= bs[j - 1]:
                raise InputValidationError(
                    f"betas[{j}]: betas must be strictly increasing", {"index": j}
                )
            if beta not in reachable:
                raise LevelNotReachableError(
                    f"betas[{j}]: {float(beta)} is not a level of the quantile",
                    {"index": j},
                )

        values: list[Fraction] = []
        segments = list(phi.segments())
        start = Fraction(0)
        i = 0
        for beta in bs:
            block = Fraction(0)
            while i < len(segments) and segments[i][1] <= beta:
                left, right, z = segments[i]
                block += (right - left) * z
                i += 1
            values.append(block / (beta - start))
            start = beta
        logger.debug("quantile_coarsened", levels=len(phi.levels), blocks=len(bs))
        return StepQuantile.canonical(bs, values)


# Singleton instance
quantile_service = QuantileService()

evaluate = quantile_service.evaluate
inverse = quantile_service.inverse
inverse_at = quantile_service.inverse_at
merged_grid = quantile_service.merged_grid
comonotonic_combine = quantile_service.comonotonic_combine
l1_distance = quantile_service.l1_distance
sup_distance = quantile_service.sup_distance
integral = quantile_service.integral
mean_quantile = quantile_service.mean_quantile
coarsen_quantile = quantile_service.coarsen_quantile
