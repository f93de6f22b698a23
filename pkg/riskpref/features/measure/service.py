"""
Operations on finite-support measures and finite random variables.
"""

from bisect import bisect_left, bisect_right
from collections import defaultdict
from fractions import Fraction
from itertools import accumulate, combinations

from riskpref.core.exceptions import DimensionMismatchError, InputValidationError
from riskpref.core.logging_config import get_logger
from riskpref.core.numeric import Number, to_exact
from riskpref.models.measure import (
    DiscreteMeasure,
    FiniteRandomVariable,
    IntervalPartition,
    MeasureKind,
    OutcomePoint,
)
from riskpref.models.quantile import StepQuantile

logger = get_logger(__name__)


def _check_alpha(alpha: Number) -> Fraction:
    a = to_exact(alpha, "alpha")
    if not 0 <= a <= 1:
        raise InputValidationError(f"alpha must lie in [0, 1], got {float(a)}")
    return a


def _check_shared_space(zs: list[FiniteRandomVariable]) -> None:
    for i, z in enumerate(zs[1:], start=1):
        if z.size != zs[0].size:
            raise DimensionMismatchError(
                f"variables[{i}] has {z.size} sample points, expected {zs[0].size}",
                {"index": i},
            )


class MeasureService:
    """Operations on probability measures and finite random variables."""

    @staticmethod
    def cdf(mu: DiscreteMeasure, t: Number) -> Fraction:
        """
        F(t) = mu((-inf, t]).

        Raises:
            UnsupportedKindError: Signed or multi-dimensional measure
        """
        mu.require_probability()
        points = mu.scalar_points()
        k = bisect_right(points, to_exact(t, "t"))
        return sum(mu.masses[:k], Fraction(0))

    @staticmethod
    def quantile_of(mu: DiscreteMeasure) -> StepQuantile:
        """
        Smallest-quantile function inf{t : F(t) >= p} of a probability measure.

        The breakpoints are the cumulative masses and the values the atoms.
        """
        mu.require_probability()
        points = mu.scalar_points()
        levels = tuple(accumulate(mu.masses))
        return StepQuantile(levels, points)

    @staticmethod
    def from_quantile(phi: StepQuantile) -> DiscreteMeasure:
        """Probability measure whose quantile function is `phi`."""
        atoms = [((z,), right - left) for left, right, z in phi.segments()]
        return DiscreteMeasure.from_atoms(atoms)

    @staticmethod
    def mix(alpha: Number, mu: DiscreteMeasure, nu: DiscreteMeasure) -> DiscreteMeasure:
        """
        Lottery alpha*mu + (1 - alpha)*nu.

        Raises:
            DimensionMismatchError: Measures of different dimension
            UnsupportedKindError: Signed input
        """
        a = _check_alpha(alpha)
        mu.require_probability()
        nu.require_probability()
        if mu.dim != nu.dim:
            raise DimensionMismatchError(
                f"cannot mix measures of dimension {mu.dim} and {nu.dim}"
            )
        atoms = [(atom.point, a * atom.mass) for atom in mu.atoms]
        atoms += [(atom.point, (1 - a) * atom.mass) for atom in nu.atoms]
        return DiscreteMeasure.from_atoms(atoms)

    @staticmethod
    def signed_difference(mu: DiscreteMeasure, nu: DiscreteMeasure) -> DiscreteMeasure | None:
        """The signed measure mu - nu, or None when the two measures coincide."""
        if mu.dim != nu.dim:
            raise DimensionMismatchError(
                f"cannot subtract measures of dimension {mu.dim} and {nu.dim}"
            )
        if mu == nu:
            return None
        atoms = [(atom.point, atom.mass) for atom in mu.atoms]
        atoms += [(atom.point, -atom.mass) for atom in nu.atoms]
        return DiscreteMeasure.from_atoms(atoms, MeasureKind.SIGNED)

    @staticmethod
    def expectation(mu: DiscreteMeasure) -> OutcomePoint:
        """Mass-weighted mean of the atom points."""
        mu.require_probability()
        return tuple(
            sum((atom.mass * atom.point[c] for atom in mu.atoms), Fraction(0))
            for c in range(mu.dim)
        )

    @staticmethod
    def mean(mu: DiscreteMeasure) -> Fraction:
        """Expectation of a one-dimensional measure as a scalar."""
        mu.require_scalar()
        return MeasureService.expectation(mu)[0]

    @staticmethod
    def coarsen(mu: DiscreteMeasure, part: IntervalPartition) -> DiscreteMeasure:
        """
        Conditional expectation of mu given the interval partition.

        Every cell of positive mass collapses to one atom at its conditional
        mean carrying the cell mass.
        """
        mu.require_probability()
        points = mu.scalar_points()
        cell_mass: dict[int, Fraction] = defaultdict(Fraction)
        cell_moment: dict[int, Fraction] = defaultdict(Fraction)
        for x, m in zip(points, mu.masses):
            # x lies in (c_{i-1}, c_i] exactly when bisect_left returns i
            cell = bisect_left(part.cuts, x)
            cell_mass[cell] += m
            cell_moment[cell] += m * x
        atoms = [((cell_moment[c] / cell_mass[c],), cell_mass[c]) for c in sorted(cell_mass)]
        logger.debug("measure_coarsened", cells=len(part.cuts) + 1, occupied=len(atoms))
        return DiscreteMeasure.from_atoms(atoms)

    @staticmethod
    def law(z: FiniteRandomVariable) -> DiscreteMeasure:
        """Distribution P o Z^-1, merging equal values."""
        return DiscreteMeasure.from_atoms(zip(z.values, z.weights))

    @staticmethod
    def quantile_of_variable(z: FiniteRandomVariable) -> StepQuantile:
        return MeasureService.quantile_of(MeasureService.law(z))

    @staticmethod
    def are_comonotonic(zs: list[FiniteRandomVariable]) -> bool:
        """
        True iff (Z_i(w) - Z_i(w'))(Z_j(w) - Z_j(w')) >= 0 for all i, j, w, w'.

        Raises:
            DimensionMismatchError: Variables on sample spaces of different size
        """
        if not zs:
            return True
        _check_shared_space(zs)
        for z, v in combinations(zs, 2):
            for a, b in combinations(range(z.size), 2):
                if (z.values[a] - z.values[b]) * (v.values[a] - v.values[b]) < 0:
                    return False
        return True

    @staticmethod
    def variable_sum(
        alpha: Number, z: FiniteRandomVariable, beta: Number, v: FiniteRandomVariable
    ) -> FiniteRandomVariable:
        """Pointwise alpha*Z + beta*V on a shared sample space."""
        a = to_exact(alpha, "alpha")
        b = to_exact(beta, "beta")
        _check_shared_space([z, v])
        if z.weights != v.weights:
            raise DimensionMismatchError("variables carry different sample-point weights")
        return FiniteRandomVariable(
            z.weights, tuple(a * x + b * y for x, y in zip(z.values, v.values))
        )

    @staticmethod
    def compound_lottery(
        alpha: Number, z: FiniteRandomVariable, v: FiniteRandomVariable
    ) -> FiniteRandomVariable:
        """
        Random variable realizing the lottery alpha Z (+) (1 - alpha) V.

        The sample space is the disjoint union of both sample spaces; a coin
        with probability alpha selects which variable is observed. Zero-weight
        branches are dropped.
        """
        a = _check_alpha(alpha)
        weights: list[Fraction] = []
        values: list[Fraction] = []
        for share, var in ((a, z), (1 - a, v)):
            if share > 0:
                weights.extend(share * w for w in var.weights)
                values.extend(var.values)
        return FiniteRandomVariable(tuple(weights), tuple(values))

    @staticmethod
    def first_order_dominates(mu: DiscreteMeasure, nu: DiscreteMeasure) -> bool:
        """True iff the quantile of mu is pointwise >= the quantile of nu."""
        phi = MeasureService.quantile_of(mu)
        psi = MeasureService.quantile_of(nu)
        grid = sorted(set(phi.levels) | set(psi.levels))
        return all(
            phi.values[bisect_left(phi.levels, p)] >= psi.values[bisect_left(psi.levels, p)]
            for p in grid
        )


# Singleton instance
measure_service = MeasureService()

cdf = measure_service.cdf
quantile_of = measure_service.quantile_of
from_quantile = measure_service.from_quantile
mix = measure_service.mix
signed_difference = measure_service.signed_difference
expectation = measure_service.expectation
mean = measure_service.mean
coarsen = measure_service.coarsen
law = measure_service.law
quantile_of_variable = measure_service.quantile_of_variable
are_comonotonic = measure_service.are_comonotonic
variable_sum = measure_service.variable_sum
compound_lottery = measure_service.compound_lottery
first_order_dominates = measure_service.first_order_dominates
