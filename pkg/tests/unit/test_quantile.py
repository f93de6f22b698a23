"""
Unit tests for step quantile operations.
"""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from riskpref.core.exceptions import (
    InputValidationError,
    LevelNotReachableError,
    NegativeCoefficientError,
)
from riskpref.features.quantile import (
    coarsen_quantile,
    comonotonic_combine,
    evaluate,
    integral,
    inverse,
    inverse_at,
    l1_distance,
    mean_quantile,
    merged_grid,
    sup_distance,
)
from riskpref.models import StepQuantile
from tests.strategies import grid_fractions, quantiles

# levels generated by the strategies are multiples of 1/64
DENSE_GRID = [Fraction(k, 128) for k in range(1, 129)]
MIDPOINTS = [Fraction(2 * k - 1, 256) for k in range(1, 129)]


@pytest.mark.unit
class TestEvaluate:
    """Test left-continuous evaluation."""

    def test_left_continuity(self, two_point_phi):
        assert evaluate(two_point_phi, "0.3") == 0
        assert evaluate(two_point_phi, "0.30001") == 1
        assert evaluate(two_point_phi, 1) == 1

    @pytest.mark.parametrize("p", [0, "-0.1", "1.01"])
    def test_outside_unit_interval(self, two_point_phi, p):
        with pytest.raises(InputValidationError):
            evaluate(two_point_phi, p)

    def test_inverse(self, two_point_phi):
        mu = inverse(two_point_phi)
        assert mu.masses == (Fraction(3, 10), Fraction(7, 10))
        assert inverse_at(two_point_phi, "-1") == 0
        assert inverse_at(two_point_phi, "0.5") == Fraction(3, 10)
        assert inverse_at(two_point_phi, 1) == 1


@pytest.mark.unit
class TestCombine:
    """Test comonotonic combination and distances."""

    def test_merged_grid(self, two_point_phi):
        psi = StepQuantile.create(["0.5", 1], [0, 2])
        assert merged_grid(two_point_phi, psi) == [Fraction(3, 10), Fraction(1, 2), 1]

    def test_combine(self, two_point_phi):
        psi = StepQuantile.create(["0.5", 1], [0, 2])
        combined = comonotonic_combine(2, two_point_phi, 1, psi)
        assert combined.levels == (Fraction(3, 10), Fraction(1, 2), 1)
        assert combined.values == (0, 2, 4)

    def test_negative_coefficient(self, two_point_phi):
        with pytest.raises(NegativeCoefficientError):
            comonotonic_combine(-1, two_point_phi, 1, two_point_phi)

    def test_distances(self, two_point_phi):
        zero = StepQuantile.constant(0)
        assert l1_distance(two_point_phi, zero) == Fraction(7, 10)
        assert sup_distance(two_point_phi, zero) == 1
        assert l1_distance(two_point_phi, two_point_phi) == 0

    @given(quantiles(), quantiles(), st.integers(0, 4), st.integers(0, 4))
    def test_integral_is_linear_on_combinations(self, phi, psi, a, b):
        combined = comonotonic_combine(a, phi, b, psi)
        assert integral(combined) == a * integral(phi) + b * integral(psi)

    @given(quantiles(), quantiles(), grid_fractions(0, 8), grid_fractions(0, 8))
    def test_combine_is_pointwise(self, phi, psi, a, b):
        combined = comonotonic_combine(a, phi, b, psi)
        for p in DENSE_GRID:
            assert evaluate(combined, p) == a * evaluate(phi, p) + b * evaluate(psi, p)

    @given(quantiles(), quantiles())
    def test_distances_match_dense_grid(self, phi, psi):
        gaps = [abs(evaluate(phi, p) - evaluate(psi, p)) for p in MIDPOINTS]
        # every grid cell lies inside one segment of each quantile, so the midpoint rule is exact
        assert l1_distance(phi, psi) == sum(gaps) / len(MIDPOINTS)
        assert sup_distance(phi, psi) == max(gaps)

    @given(quantiles(), quantiles(), quantiles())
    def test_triangle_inequality(self, phi, psi, chi):
        assert l1_distance(phi, chi) <= l1_distance(phi, psi) + l1_distance(psi, chi)
        assert sup_distance(phi, chi) <= sup_distance(phi, psi) + sup_distance(psi, chi)

    @given(quantiles(), quantiles())
    def test_distances_are_symmetric(self, phi, psi):
        assert l1_distance(phi, psi) == l1_distance(psi, phi)
        assert sup_distance(phi, psi) == sup_distance(psi, phi)
        assert (l1_distance(phi, psi) == 0) == (phi == psi)


@pytest.mark.unit
class TestCoarsenQuantile:
    """Test block averaging at reachable levels."""

    def test_block_average(self):
        phi = StepQuantile.create(["0.25", "0.5", "0.75", 1], [-3, -2, -1, 0])
        coarse = coarsen_quantile(phi, ["0.25", "0.75", 1])
        assert coarse.levels == (Fraction(1, 4), Fraction(3, 4), 1)
        assert coarse.values == (-3, Fraction(-3, 2), 0)

    def test_trivial_coarsening_is_mean(self, two_point_phi):
        assert coarsen_quantile(two_point_phi, [1]) == mean_quantile(two_point_phi)
        assert mean_quantile(two_point_phi) == StepQuantile.constant("0.7")

    def test_unreachable_level(self, two_point_phi):
        with pytest.raises(LevelNotReachableError, match=r"betas\[0\]"):
            coarsen_quantile(two_point_phi, ["0.5", 1])

    @pytest.mark.parametrize("betas", [[], ["0.3"], [1, "0.3"]])
    def test_invalid_betas(self, two_point_phi, betas):
        with pytest.raises(InputValidationError):
            coarsen_quantile(two_point_phi, betas)

    @given(quantiles())
    def test_partial_integrals_preserved(self, phi):
        betas = phi.levels[::2]
        if betas[-1] != 1:
            betas = betas + (Fraction(1),)
        coarse = coarsen_quantile(phi, betas)
        assert integral(coarse) == integral(phi)

    @given(quantiles(), st.data())
    def test_projection(self, phi, data):
        inner = []
        if len(phi.levels) > 1:
            inner = data.draw(st.lists(st.sampled_from(phi.levels[:-1]), unique=True))
        betas = [*sorted(inner), Fraction(1)]
        once = coarsen_quantile(phi, betas)
        # canonical values strictly increase, so block averages never merge
        assert list(once.levels) == betas
        assert coarsen_quantile(once, betas) == once

    @given(quantiles())
    def test_all_levels_is_identity(self, phi):
        assert coarsen_quantile(phi, phi.levels) == phi
