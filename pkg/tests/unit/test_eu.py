"""
Unit tests for expected utility.
"""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from riskpref.core.exceptions import EvaluationDomainError, InputValidationError, UnsupportedKindError
from riskpref.features.eu import (
    eu_evaluate,
    eu_of_variable,
    jensen_gap,
    mixture_affinity_check,
    monotonicity_check_eu,
    risk_aversion_audit_eu,
)
from riskpref.features.measure import first_order_dominates, mean
from riskpref.models import (
    DiscreteMeasure,
    FiniteRandomVariable,
    IntervalPartition,
    MeasureKind,
    UtilityFunction,
)
from tests.strategies import (
    concave_utilities,
    grid_fractions,
    measures,
    monotone_utilities,
    partitions,
    pwl_utilities,
)


@pytest.mark.unit
class TestEvaluate:
    """Test expected utility evaluation."""

    def test_identity_gives_mean(self, identity_u, skewed):
        assert eu_evaluate(identity_u, skewed) == mean(skewed)

    def test_concave_utility(self, sqrt_like_u, skewed):
        # u(-1) = -2, u(0) = 0, u(2) = 3
        assert eu_evaluate(sqrt_like_u, skewed) == Fraction(1, 4)

    def test_constant_utility(self, skewed):
        assert eu_evaluate(UtilityFunction.constant(7), skewed) == 7

    def test_table_missing_atom(self, skewed):
        u = UtilityFunction.table([-1, 0], [0, 1])
        with pytest.raises(EvaluationDomainError):
            eu_evaluate(u, skewed)

    def test_signed_measure_rejected(self, identity_u):
        mu = DiscreteMeasure.from_atoms([(0, 1), (1, -1)], MeasureKind.SIGNED)
        with pytest.raises(UnsupportedKindError):
            eu_evaluate(identity_u, mu)

    def test_multidimensional_table(self):
        u = UtilityFunction.table([[0, 0], [1, 1]], [0, 10])
        mu = DiscreteMeasure.from_atoms([((0, 0), "0.3"), ((1, 1), "0.7")])
        assert eu_evaluate(u, mu) == 7

    def test_random_variable(self, sqrt_like_u):
        z = FiniteRandomVariable.create(["0.5", "0.25", "0.25"], [1, 1, 4])
        assert eu_of_variable(sqrt_like_u, z) == Fraction(5, 2)

    def test_affine_transform_preserves_order(self, sqrt_like_u, coin, skewed):
        v = sqrt_like_u.affine(3, -1)
        assert (eu_evaluate(sqrt_like_u, coin) > eu_evaluate(sqrt_like_u, skewed)) == (
            eu_evaluate(v, coin) > eu_evaluate(v, skewed)
        )


@pytest.mark.unit
class TestStructure:
    """Test mixture affinity, Jensen and risk aversion."""

    @given(pwl_utilities(), measures(), measures(), st.integers(0, 16))
    def test_mixture_affinity_is_exact(self, u, mu, nu, k):
        assert mixture_affinity_check(u, mu, nu, Fraction(k, 16)) == 0

    @given(measures())
    def test_jensen_gap_nonnegative_for_concave(self, mu):
        u = UtilityFunction.piecewise_linear([-10, 0, 10], [-20, 0, 5])
        assert jensen_gap(u, mu) >= 0

    @given(concave_utilities(), measures())
    def test_jensen_for_generated_concave(self, u, mu):
        assert jensen_gap(u, mu) >= 0

    @given(concave_utilities(), measures(), partitions())
    def test_generated_concave_is_risk_averse(self, u, mu, part):
        report = risk_aversion_audit_eu(u, mu, [part])
        assert report.passed
        assert all(check.coarse >= check.fine for check in report.checks)

    def test_concave_utility_is_risk_averse(self, sqrt_like_u, skewed):
        report = risk_aversion_audit_eu(
            sqrt_like_u, skewed, [IntervalPartition.from_cuts([0]), IntervalPartition.from_cuts([-1, 1])]
        )
        assert report.passed
        assert len(report.checks) == 3
        assert report.checks[0].cuts == ()

    def test_convex_kink_violates(self):
        u = UtilityFunction.piecewise_linear([-1, 0, 1], [-1, 0, 3])
        mu = DiscreteMeasure.from_atoms([(-1, "0.5"), (1, "0.5")])
        report = risk_aversion_audit_eu(u, mu, [])
        assert not report.passed
        assert report.checks[0].coarse == 0
        assert report.checks[0].fine == 1


@pytest.mark.unit
class TestMonotonicity:
    def test_monotone(self, sqrt_like_u):
        assert monotonicity_check_eu(sqrt_like_u, [(2, 1), (0, -5)])

    @given(monotone_utilities(), measures(), st.data())
    def test_first_order_dominance_raises_utility(self, u, mu, data):
        points = mu.scalar_points()
        n = len(points)
        shifts = data.draw(st.lists(grid_fractions(0, 8), min_size=n, max_size=n))
        better = DiscreteMeasure.from_atoms(
            (x + d, m) for x, d, m in zip(points, shifts, mu.masses)
        )
        assert first_order_dominates(better, mu)
        assert eu_evaluate(u, better) >= eu_evaluate(u, mu)

    def test_non_monotone_slope(self):
        u = UtilityFunction.piecewise_linear([0, 1, 2], [0, 1, 0])
        assert not monotonicity_check_eu(u, [])

    def test_table_pairs(self):
        u = UtilityFunction.table([[0, 0], [1, 0]], [1, 0])
        assert not monotonicity_check_eu(u, [([1, 0], [0, 0])])

    def test_invalid_pair(self, sqrt_like_u):
        with pytest.raises(InputValidationError, match=r"pairs\[0\]"):
            monotonicity_check_eu(sqrt_like_u, [(0, 1)])
