"""
Unit tests for measure operations.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from riskpref.core.exceptions import DimensionMismatchError, InputValidationError, UnsupportedKindError
from riskpref.features.measure import (
    are_comonotonic,
    cdf,
    coarsen,
    compound_lottery,
    expectation,
    first_order_dominates,
    from_quantile,
    law,
    mean,
    mix,
    quantile_of,
    quantile_of_variable,
    signed_difference,
    variable_sum,
)
from riskpref.features.quantile import coarsen_quantile, comonotonic_combine, evaluate, inverse_at
from riskpref.models import DiscreteMeasure, FiniteRandomVariable, IntervalPartition
from tests.factories import MeasureFactory
from tests.strategies import measures, partitions, unit_fractions, variable_lists


@pytest.mark.unit
class TestCdfAndQuantile:
    """Test distribution function and quantile construction."""

    def test_cdf_is_right_continuous(self, skewed):
        assert cdf(skewed, -2) == 0
        assert cdf(skewed, -1) == Fraction(1, 4)
        assert cdf(skewed, "-0.5") == Fraction(1, 4)
        assert cdf(skewed, 0) == Fraction(3, 4)
        assert cdf(skewed, 10) == 1

    def test_quantile_of(self, skewed):
        phi = quantile_of(skewed)
        assert phi.levels == (Fraction(1, 4), Fraction(3, 4), Fraction(1))
        assert phi.values == (-1, 0, 2)

    def test_point_mass_quantile_is_constant(self):
        assert quantile_of(DiscreteMeasure.point_mass(5)).is_constant()

    def test_multidimensional_rejected(self):
        mu = DiscreteMeasure.from_atoms([((0, 1), 1)])
        with pytest.raises(UnsupportedKindError):
            quantile_of(mu)

    @settings(max_examples=500)
    @given(measures(max_atoms=20))
    def test_round_trip_is_identity(self, mu):
        assert from_quantile(quantile_of(mu)) == mu

    @settings(max_examples=500)
    @given(measures(max_atoms=20))
    def test_galois_relation(self, mu):
        """phi(p) <= z  iff  p <= F(z), at every level/atom pair."""
        phi = quantile_of(mu)
        for p in phi.levels:
            for z in mu.scalar_points():
                assert (evaluate(phi, p) <= z) == (p <= cdf(mu, z))
                assert inverse_at(phi, z) == cdf(mu, z)


@pytest.mark.unit
class TestMixAndExpectation:
    def test_mix(self, coin):
        sure = DiscreteMeasure.point_mass(1)
        mixed = mix("0.5", coin, sure)
        assert mixed.masses == (Fraction(1, 4), Fraction(3, 4))

    def test_mix_endpoints(self, coin, skewed):
        assert mix(1, coin, skewed) == coin
        assert mix(0, coin, skewed) == skewed

    def test_mix_rejects_alpha(self, coin):
        with pytest.raises(InputValidationError):
            mix("1.5", coin, coin)

    def test_mix_dimension_mismatch(self, coin):
        plane = DiscreteMeasure.from_atoms([((0, 0), 1)])
        with pytest.raises(DimensionMismatchError):
            mix("0.5", coin, plane)

    def test_expectation(self, skewed):
        assert expectation(skewed) == (Fraction(1, 4),)
        assert mean(skewed) == Fraction(1, 4)

    def test_vector_expectation(self):
        mu = DiscreteMeasure.from_atoms([((0, 2), "0.5"), ((4, 0), "0.5")])
        assert expectation(mu) == (2, 1)

    def test_signed_difference(self, coin, skewed):
        diff = signed_difference(coin, skewed)
        assert not diff.is_probability
        assert sum(diff.masses) == 0
        assert signed_difference(coin, coin) is None


@pytest.mark.unit
class TestCoarsen:
    """Test conditional expectation on interval partitions."""

    def test_trivial_partition_is_mean(self, skewed):
        assert coarsen(skewed, IntervalPartition()) == DiscreteMeasure.point_mass("0.25")

    def test_cells_are_left_open_right_closed(self):
        mu = MeasureFactory.create(points=[-1, 0, 1, 3], masses=["0.25"] * 4)
        coarse = coarsen(mu, IntervalPartition.from_cuts([0]))
        # -1 and 0 share the cell (-inf, 0]
        assert coarse.scalar_points() == (Fraction(-1, 2), 2)
        assert coarse.masses == (Fraction(1, 2), Fraction(1, 2))

    @given(measures())
    def test_preserves_mean(self, mu):
        part = IntervalPartition.from_cuts([-1, 0, 2])
        assert mean(coarsen(mu, part)) == mean(mu)

    @given(st.lists(unit_fractions, min_size=3, max_size=3, unique=True))
    def test_four_point_cells(self, ps):
        p1, p2, p3 = sorted(ps)
        mu = DiscreteMeasure.from_atoms(
            [(-3, p1), (-2, p2 - p1), (-1, p3 - p2), (0, 1 - p3)]
        )
        coarse = coarsen(mu, IntervalPartition.from_cuts([-3, -1]))
        middle = (2 * p1 - p2 - p3) / (p3 - p1)
        assert coarse == DiscreteMeasure.from_atoms([(-3, p1), (middle, p3 - p1), (0, 1 - p3)])

    @given(measures())
    def test_finest_partition_is_identity(self, mu):
        assert coarsen(mu, IntervalPartition.from_cuts(mu.scalar_points())) == mu

    @given(measures(), partitions())
    def test_commutes_with_quantile_coarsening(self, mu, part):
        betas = sorted({cdf(mu, c) for c in part.cuts} - {Fraction(0), Fraction(1)})
        expected = coarsen_quantile(quantile_of(mu), [*betas, 1])
        assert quantile_of(coarsen(mu, part)) == expected

    @given(measures(), partitions())
    def test_coarsening_is_idempotent(self, mu, part):
        once = coarsen(mu, part)
        assert coarsen(once, part) == once


@pytest.mark.unit
class TestRandomVariables:
    """Test laws, comonotonicity and lotteries of random variables."""

    def test_law_merges_values(self):
        z = FiniteRandomVariable.create(["0.25", "0.25", "0.5"], [1, 1, 3])
        assert law(z) == MeasureFactory.create(points=[1, 3], masses=["0.5", "0.5"])

    def test_comonotonic(self):
        w = ["0.25"] * 4
        z = FiniteRandomVariable.create(w, [0, 1, 2, 3])
        v = FiniteRandomVariable.create(w, [5, 5, 6, 9])
        anti = FiniteRandomVariable.create(w, [3, 2, 1, 0])
        assert are_comonotonic([z, v])
        assert not are_comonotonic([z, anti])
        assert are_comonotonic([])

    @given(variable_lists().flatmap(lambda vs: st.tuples(st.just(vs), st.permutations(vs))))
    def test_comonotonicity_ignores_order(self, pair):
        variables, shuffled = pair
        assert are_comonotonic(variables) == are_comonotonic(shuffled)

    @given(variable_lists(max_variables=1))
    def test_comonotonicity_is_reflexive(self, variables):
        z = variables[0]
        assert are_comonotonic([z, z])

    def test_comonotonic_size_mismatch(self):
        z = FiniteRandomVariable.create([1], [0])
        v = FiniteRandomVariable.create(["0.5", "0.5"], [0, 1])
        with pytest.raises(DimensionMismatchError, match=r"variables\[1\]"):
            are_comonotonic([z, v])

    def test_comonotonic_sum_quantile(self):
        """The quantile of a comonotonic sum is the sum of quantiles."""
        w = ["0.2", "0.3", "0.5"]
        z = FiniteRandomVariable.create(w, [1, 2, 4])
        v = FiniteRandomVariable.create(w, [0, 0, 3])
        total = variable_sum(2, z, 3, v)
        assert quantile_of_variable(total) == comonotonic_combine(
            2, quantile_of_variable(z), 3, quantile_of_variable(v)
        )

    def test_compound_lottery_law_is_mixture(self):
        z = FiniteRandomVariable.create(["0.5", "0.5"], [0, 2])
        v = FiniteRandomVariable.create([1], [1])
        lottery = compound_lottery("0.25", z, v)
        assert law(lottery) == mix("0.25", law(z), law(v))

    def test_first_order_dominance(self, coin):
        better = MeasureFactory.create(points=[1, 2])
        assert first_order_dominates(better, coin)
        assert not first_order_dominates(coin, better)
        assert first_order_dominates(coin, coin)
