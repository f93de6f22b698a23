"""
Random instance generators for the property suites.

Every instance lives on a rational grid (integers over a small
denominator) so that exact evaluation stays cheap.
"""

from fractions import Fraction

import numpy as np

from riskpref.features.measure.service import quantile_of
from riskpref.models.distortion import DistortionFunction
from riskpref.models.measure import DiscreteMeasure, IntervalPartition
from riskpref.models.quantile import StepQuantile
from riskpref.models.utility import UtilityFunction

OUTCOME_DENOMINATOR = 4
OUTCOME_RANGE = 40
LEVEL_DENOMINATOR = 64
MAX_ATOMS = 8
MAX_KNOTS = 6


def rational(rng: np.random.Generator, low: int, high: int, denominator: int) -> Fraction:
    """Uniform draw from {low/d, ..., high/d}."""
    return Fraction(int(rng.integers(low, high + 1)), denominator)


def distinct_outcomes(rng: np.random.Generator, count: int) -> list[Fraction]:
    numerators = rng.choice(
        np.arange(-OUTCOME_RANGE, OUTCOME_RANGE + 1), size=count, replace=False
    )
    return sorted(Fraction(int(n), OUTCOME_DENOMINATOR) for n in numerators)


def interior_levels(rng: np.random.Generator, count: int) -> list[Fraction]:
    """Sorted distinct levels strictly inside (0, 1)."""
    numerators = rng.choice(np.arange(1, LEVEL_DENOMINATOR), size=count, replace=False)
    return sorted(Fraction(int(n), LEVEL_DENOMINATOR) for n in numerators)


def random_measure(rng: np.random.Generator, max_atoms: int = MAX_ATOMS) -> DiscreteMeasure:
    """One-dimensional probability measure with integer-weighted masses."""
    count = int(rng.integers(1, max_atoms + 1))
    points = distinct_outcomes(rng, count)
    weights = [int(w) for w in rng.integers(1, 10, size=count)]
    total = sum(weights)
    return DiscreteMeasure.from_atoms(
        ((x,), Fraction(w, total)) for x, w in zip(points, weights)
    )


def random_quantile(rng: np.random.Generator, max_atoms: int = MAX_ATOMS) -> StepQuantile:
    return quantile_of(random_measure(rng, max_atoms))


def random_betas(rng: np.random.Generator, phi: StepQuantile) -> tuple[Fraction, ...]:
    """A random subset of the levels of phi that always contains 1."""
    inner = [p for p in phi.levels[:-1] if rng.random() < 0.5]
    return tuple(inner) + (Fraction(1),)


def random_partition(rng: np.random.Generator) -> IntervalPartition:
    count = int(rng.integers(0, 4))
    cuts = distinct_outcomes(rng, count) if count else []
    return IntervalPartition.from_cuts(cuts)


def _distortion_from_slopes(knots: list[Fraction], slopes: list[Fraction]) -> DistortionFunction:
    values = [Fraction(0)]
    for a, b, s in zip(knots, knots[1:], slopes):
        values.append(values[-1] + s * (b - a))
    return DistortionFunction.create(knots, values).normalized()


def _knot_grid(rng: np.random.Generator, interior: int) -> list[Fraction]:
    return [Fraction(0), *interior_levels(rng, interior), Fraction(1)]


def random_distortion(rng: np.random.Generator) -> DistortionFunction:
    """Normalized nondecreasing distortion, flat pieces allowed."""
    knots = _knot_grid(rng, int(rng.integers(0, MAX_KNOTS)))
    slopes = [Fraction(int(s)) for s in rng.integers(0, 8, size=len(knots) - 1)]
    if not any(slopes):
        slopes[-1] = Fraction(1)
    return _distortion_from_slopes(knots, slopes)


def concave_distortion(rng: np.random.Generator) -> DistortionFunction:
    """Normalized concave distortion (nonincreasing positive slopes)."""
    knots = _knot_grid(rng, int(rng.integers(0, MAX_KNOTS)))
    slopes = sorted((Fraction(int(s)) for s in rng.integers(1, 9, size=len(knots) - 1)), reverse=True)
    return _distortion_from_slopes(knots, slopes)


def non_concave_distortion(rng: np.random.Generator) -> DistortionFunction:
    """Normalized distortion with at least one strict slope increase."""
    knots = _knot_grid(rng, int(rng.integers(1, MAX_KNOTS)))
    slopes = [Fraction(int(s)) for s in rng.integers(0, 8, size=len(knots) - 1)]
    j = int(rng.integers(0, len(slopes) - 1))
    if slopes[j + 1] <= slopes[j]:
        slopes[j + 1] = slopes[j] + int(rng.integers(1, 4))
    return _distortion_from_slopes(knots, slopes)


def dominating_distortion(rng: np.random.Generator) -> DistortionFunction:
    """Normalized distortion with w(p) >= p everywhere."""
    w = random_distortion(rng)
    # the upper envelope max(w, id) is w(p) >= p at every knot of both
    grid = sorted(set(w.knots) | _crossings(w))
    return DistortionFunction.create(grid, [max(w(q), q) for q in grid])


def violating_distortion(rng: np.random.Generator) -> DistortionFunction:
    """Normalized distortion with w(q) < q at some interior knot."""
    knots = _knot_grid(rng, int(rng.integers(1, MAX_KNOTS)))
    q = knots[int(rng.integers(1, len(knots) - 1))]
    below = q * Fraction(int(rng.integers(0, 8)), 8)
    values = [Fraction(0)]
    for k in knots[1:]:
        if k < q:
            values.append(below * k / q)
        elif k == q:
            values.append(below)
        else:
            values.append(below + (1 - below) * (k - q) / (1 - q))
    return DistortionFunction.create(knots, values)


def _crossings(w: DistortionFunction) -> set[Fraction]:
    """Points where a segment of w crosses the diagonal."""
    points: set[Fraction] = set()
    for (a, wa), (b, wb) in zip(zip(w.knots, w.values), zip(w.knots[1:], w.values[1:])):
        da, db = wa - a, wb - b
        if da * db < 0:
            points.add(a + (b - a) * da / (da - db))
    return points


def random_pwl_utility(rng: np.random.Generator) -> UtilityFunction:
    count = int(rng.integers(1, MAX_KNOTS + 1))
    knots = distinct_outcomes(rng, count)
    values = [rational(rng, -40, 40, 4) for _ in knots]
    return UtilityFunction.piecewise_linear(knots, values)


def concave_utility(rng: np.random.Generator) -> UtilityFunction:
    """Concave piecewise-linear utility (nonincreasing slopes)."""
    count = int(rng.integers(2, MAX_KNOTS + 1))
    knots = distinct_outcomes(rng, count)
    slopes = sorted((rational(rng, -8, 16, 4) for _ in knots[1:]), reverse=True)
    values = [rational(rng, -8, 8, 4)]
    for a, b, s in zip(knots, knots[1:], slopes):
        values.append(values[-1] + s * (b - a))
    return UtilityFunction.piecewise_linear(knots, values)


def convex_kink_utility(rng: np.random.Generator) -> tuple[UtilityFunction, DiscreteMeasure]:
    """
    Utility with a single convex kink and a measure straddling it.

    u has slope s1 left of the kink and s2 > s1 right of it; the measure has
    atoms on both sides, so its trivial coarsening lowers expected utility.
    """
    kink = rational(rng, -8, 8, 4)
    s1 = rational(rng, 0, 8, 4)
    s2 = s1 + rational(rng, 1, 8, 4)
    u = UtilityFunction.piecewise_linear([kink - 1, kink, kink + 1], [-s1, 0, s2])
    left = kink - rational(rng, 1, 8, 4)
    right = kink + rational(rng, 1, 8, 4)
    m = rational(rng, 1, 7, 8)
    mu = DiscreteMeasure.from_atoms([((left,), m), ((right,), 1 - m)])
    return u, mu
