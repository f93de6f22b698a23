"""
Hypothesis strategies for prospects, utilities and distortions.

Values live on small rational grids so exact arithmetic stays fast.
"""

from fractions import Fraction

import hypothesis.strategies as st

from riskpref.models import (
    DiscreteMeasure,
    DistortionFunction,
    FiniteRandomVariable,
    IntervalPartition,
    StepQuantile,
    UtilityFunction,
)


def grid_fractions(low: int = -40, high: int = 40, denominator: int = 4):
    return st.integers(low, high).map(lambda n: Fraction(n, denominator))


unit_fractions = st.integers(1, 63).map(lambda n: Fraction(n, 64))


@st.composite
def measures(draw, max_atoms: int = 8) -> DiscreteMeasure:
    points = draw(st.lists(grid_fractions(), min_size=1, max_size=max_atoms, unique=True))
    raw = draw(st.lists(st.integers(1, 9), min_size=len(points), max_size=len(points)))
    total = sum(raw)
    return DiscreteMeasure.from_atoms(((x,), Fraction(m, total)) for x, m in zip(points, raw))


@st.composite
def quantiles(draw, max_segments: int = 8) -> StepQuantile:
    inner = draw(st.lists(unit_fractions, max_size=max_segments - 1, unique=True))
    levels = sorted(inner) + [Fraction(1)]
    values = sorted(draw(st.lists(grid_fractions(), min_size=len(levels), max_size=len(levels))))
    return StepQuantile.create(levels, values)


@st.composite
def distortions(draw, normalized: bool = True, concave: bool = False) -> DistortionFunction:
    inner = draw(st.lists(unit_fractions, max_size=5, unique=True))
    knots = [Fraction(0), *sorted(inner), Fraction(1)]
    slopes = draw(
        st.lists(st.integers(0, 7), min_size=len(knots) - 1, max_size=len(knots) - 1)
    )
    if concave:
        slopes = sorted((s + 1 for s in slopes), reverse=True)
    if not any(slopes):
        slopes[-1] = 1
    values = [Fraction(0)]
    for a, b, s in zip(knots, knots[1:], slopes):
        values.append(values[-1] + s * (b - a))
    w = DistortionFunction.create(knots, values)
    return w.normalized() if normalized else w


@st.composite
def pwl_utilities(draw) -> UtilityFunction:
    knots = sorted(draw(st.lists(grid_fractions(), min_size=1, max_size=6, unique=True)))
    values = draw(st.lists(grid_fractions(), min_size=len(knots), max_size=len(knots)))
    return UtilityFunction.piecewise_linear(knots, values)


def _from_slopes(draw, slopes_strategy) -> UtilityFunction:
    knots = sorted(draw(st.lists(grid_fractions(), min_size=1, max_size=6, unique=True)))
    slopes = draw(slopes_strategy(len(knots) - 1))
    values = [draw(grid_fractions())]
    for a, b, s in zip(knots, knots[1:], slopes):
        values.append(values[-1] + s * (b - a))
    return UtilityFunction.piecewise_linear(knots, values)


@st.composite
def concave_utilities(draw) -> UtilityFunction:
    """Piecewise-linear utilities with nonincreasing slopes."""
    return _from_slopes(
        draw,
        lambda n: st.lists(grid_fractions(-8, 8, 2), min_size=n, max_size=n).map(
            lambda s: sorted(s, reverse=True)
        ),
    )


@st.composite
def monotone_utilities(draw) -> UtilityFunction:
    """Piecewise-linear utilities with nonnegative slopes."""
    return _from_slopes(
        draw, lambda n: st.lists(grid_fractions(0, 8, 2), min_size=n, max_size=n)
    )


def partitions(max_cuts: int = 4):
    return st.lists(grid_fractions(), max_size=max_cuts, unique=True).map(
        lambda cuts: IntervalPartition.from_cuts(sorted(cuts))
    )


@st.composite
def variable_lists(draw, max_variables: int = 4) -> list[FiniteRandomVariable]:
    """Variables on one shared state space; some are drawn sorted so comonotone lists occur."""
    states = draw(st.integers(1, 5))
    raw = draw(st.lists(st.integers(1, 9), min_size=states, max_size=states))
    weights = [Fraction(r, sum(raw)) for r in raw]
    variables = []
    for _ in range(draw(st.integers(1, max_variables))):
        values = draw(st.lists(st.integers(-5, 5), min_size=states, max_size=states))
        if draw(st.booleans()):
            values = sorted(values)
        variables.append(FiniteRandomVariable.create(weights, values))
    return variables
