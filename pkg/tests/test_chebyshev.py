"""Tests for the Chebyshev grid, expansions and piecewise evaluation"""
import numpy as np
import pytest
from numpy.polynomial import chebyshev as cheb
from numpy.testing import assert_allclose, assert_array_equal

from src.core.chebyshev import (chebyshev_nodes, make_grid, vals_to_coefs, eval_expansion,
                                fit_ratio, sampling_floor, ChebExpansion, PiecewiseChebyshev, EPS0)
from src.core.errors import InvalidConfig, NumericFailure, OutOfDomain


def _basis(j, k):
    coefs = np.zeros(k)
    coefs[j] = 1.0
    return coefs


class TestNodes:
    def test_three_nodes(self):
        assert_allclose(chebyshev_nodes(3), [-1.0, 0.0, 1.0], atol=1e-16)

    def test_five_nodes(self):
        assert chebyshev_nodes(5)[1] == pytest.approx(np.cos(3 * np.pi / 4), abs=1e-15)

    def test_ascending_and_symmetric(self):
        nodes = chebyshev_nodes(16)
        assert np.all(np.diff(nodes) > 0)
        assert nodes[0] == -1.0 and nodes[-1] == 1.0
        assert_array_equal(nodes, -nodes[::-1])

    def test_too_few_nodes(self):
        with pytest.raises(InvalidConfig):
            chebyshev_nodes(1)


class TestGrid:
    def test_cached(self):
        assert make_grid(16) is make_grid(16)

    def test_rejects_small_k(self):
        with pytest.raises(InvalidConfig):
            make_grid(3)

    def test_read_only(self, grid):
        with pytest.raises(ValueError):
            grid.diff[0, 0] = 1.0

    def test_points_end_exactly(self, grid):
        pts = grid.points(0.1, 0.7)
        assert pts[0] == 0.1 and pts[-1] == 0.7

    def test_differentiates_quadratic(self, grid):
        t = grid.nodes
        assert np.abs(grid.diff @ (t * t) - 2.0 * t).max() < 1e-12

    def test_diff_annihilates_constants(self, grid):
        assert np.abs(grid.diff @ np.ones(grid.k)).max() < 1e-12

    def test_mapped_derivative(self, grid):
        a, b = 0.5, 2.0
        t = grid.points(a, b)
        assert_allclose(grid.derivative(np.sin(3 * t), a, b), 3 * np.cos(3 * t), atol=1e-9)

    def test_antiderivative_vanishes_at_left(self, grid):
        a, b = -0.3, 1.2
        t = grid.points(a, b)
        anti = grid.antiderivative(np.exp(t), a, b)
        assert anti[0] == pytest.approx(0.0, abs=1e-15)
        assert_allclose(anti, np.exp(t) - np.exp(a), atol=1e-13)

    def test_right_anchored_operator(self, grid):
        a, b = 0.0, 1.0
        t = grid.points(a, b)
        anti = grid.integration_operator(a, b, from_right=True) @ np.cos(t)
        assert_allclose(anti, np.sin(t) - np.sin(b), atol=1e-14)

    def test_integration_inverts_differentiation(self, grid):
        t = grid.nodes
        f = np.exp(t) * np.sin(2 * t)
        recovered = grid.integ @ (grid.diff @ f) + f[0]
        assert_allclose(recovered, f, atol=1e-11)


class TestValsToCoefs:
    def test_constant(self, grid):
        e = vals_to_coefs(grid, np.ones(grid.k), -1.0, 1.0)
        assert_allclose(e.coefs, _basis(0, grid.k), atol=1e-15)

    def test_linear(self, grid):
        e = vals_to_coefs(grid, grid.nodes.copy(), -1.0, 1.0)
        assert_allclose(e.coefs, _basis(1, grid.k), atol=1e-15)

    def test_second_chebyshev_polynomial(self, grid):
        t = grid.nodes
        e = vals_to_coefs(grid, 2 * t * t - 1, -1.0, 1.0)
        assert_allclose(e.coefs, _basis(2, grid.k), atol=1e-15)

    def test_matches_numpy_interpolation(self, grid):
        vals = np.cos(np.pi * grid.nodes)
        expected = cheb.chebfit(grid.nodes, vals, grid.k - 1)
        assert_allclose(grid.vals2coefs @ vals, expected, atol=1e-13)

    def test_complex_samples(self, grid):
        t = grid.nodes
        e = vals_to_coefs(grid, t + 1j * np.ones(grid.k), -1.0, 1.0)
        assert e.coefs[0] == pytest.approx(1j)
        assert e.coefs[1] == pytest.approx(1.0)

    def test_bad_shape(self, grid):
        with pytest.raises(InvalidConfig):
            vals_to_coefs(grid, np.ones(grid.k - 1), 0.0, 1.0)

    def test_empty_interval(self, grid):
        with pytest.raises(InvalidConfig):
            vals_to_coefs(grid, np.ones(grid.k), 1.0, 1.0)

    def test_non_finite(self, grid):
        vals = np.ones(grid.k)
        vals[3] = np.nan
        with pytest.raises(NumericFailure):
            vals_to_coefs(grid, vals, 0.0, 1.0)


class TestEvalExpansion:
    def test_constant(self, grid):
        e = vals_to_coefs(grid, np.full(grid.k, 5.0), 2.0, 3.0)
        assert eval_expansion(e, 2.37) == pytest.approx(5.0, abs=1e-14)

    def test_third_chebyshev_polynomial(self, grid):
        e = ChebExpansion(a=-1.0, b=1.0, coefs=_basis(3, grid.k))
        assert eval_expansion(e, 0.5) == pytest.approx(-1.0, abs=1e-15)

    def test_exponential(self, grid):
        e = vals_to_coefs(grid, np.exp(grid.points(0.0, 1.0)), 0.0, 1.0)
        assert e(0.5) == pytest.approx(np.exp(0.5), abs=1e-12)

    def test_vectorised(self, grid):
        e = vals_to_coefs(grid, np.exp(grid.points(0.0, 1.0)), 0.0, 1.0)
        t = np.linspace(0.0, 1.0, 7)
        assert_allclose(e(t), np.exp(t), rtol=1e-12)

    def test_endpoints_inside(self, grid):
        e = vals_to_coefs(grid, np.exp(grid.points(0.0, 1.0)), 0.0, 1.0)
        assert e(1.0) == pytest.approx(np.e, rel=1e-13)

    @pytest.mark.parametrize("t", [-0.1, 1.1, np.nan])
    def test_out_of_domain(self, grid, t):
        e = vals_to_coefs(grid, np.ones(grid.k), 0.0, 1.0)
        with pytest.raises(OutOfDomain):
            e(t)


class TestFitRatio:
    def test_first_polynomial(self, grid):
        assert fit_ratio(grid, grid.nodes.copy()) == pytest.approx(0.0, abs=1e-15)

    def test_top_polynomial(self, grid):
        vals = cheb.chebval(grid.nodes, _basis(15, grid.k))
        assert fit_ratio(grid, vals) == pytest.approx(1.0, rel=1e-12)

    def test_exponential_is_resolved(self, grid):
        assert fit_ratio(grid, np.exp(grid.nodes)) < 1e-12

    def test_oscillatory_is_not_resolved(self, grid):
        assert fit_ratio(grid, np.sin(40 * grid.nodes)) > 1e-3

    def test_zero_samples(self, grid):
        assert fit_ratio(grid, np.zeros(grid.k)) == 0.0

    def test_scale_invariant(self, grid):
        vals = np.exp(grid.nodes) * np.cos(3 * grid.nodes)
        assert fit_ratio(grid, 1e8 * vals) == pytest.approx(fit_ratio(grid, vals), rel=1e-10)


class TestSamplingFloor:
    def test_smooth_function(self, grid):
        t = grid.points(0.0, 1.0)
        assert sampling_floor(grid, np.exp(t), np.exp(t), 0.0, 1.0) < 1e-14

    def test_grows_near_pole(self, grid):
        a, b = 1.0 - 2e-7, 1.0 - 1e-7
        t = grid.points(a, b)
        vals = 1.0 / (1.0 - t) ** 2
        dvals = 2.0 / (1.0 - t) ** 3
        floor = sampling_floor(grid, vals, dvals, a, b)
        assert floor == pytest.approx(EPS0 * 2.0 * b / (1.0 - b), rel=1e-6)
        assert floor > 1e-12

    def test_ignores_zero_samples(self):
        odd = make_grid(17)
        t = odd.points(-1.0, 1.0)
        assert t[8] == 0.0
        assert np.isfinite(sampling_floor(odd, t, np.ones_like(t), -1.0, 1.0))


class TestPiecewiseChebyshev:
    @pytest.fixture
    def piecewise(self, grid):
        breakpoints = np.array([0.0, 0.5, 1.0, 2.0])
        coefs = np.array([grid.vals2coefs @ np.full(grid.k, float(j)) for j in range(3)])
        return PiecewiseChebyshev(breakpoints, coefs)

    def test_shared_endpoint_belongs_to_left(self, piecewise):
        assert piecewise(0.5) == pytest.approx(0.0, abs=1e-14)
        assert piecewise(1.0) == pytest.approx(1.0, abs=1e-14)

    def test_domain_endpoints(self, piecewise):
        assert piecewise(0.0) == pytest.approx(0.0, abs=1e-14)
        assert piecewise(2.0) == pytest.approx(2.0, abs=1e-14)

    def test_vectorised_keeps_shape(self, piecewise):
        t = np.array([[0.1, 0.7], [1.5, 2.0]])
        assert_allclose(piecewise(t), [[0.0, 1.0], [2.0, 2.0]], atol=1e-14)

    def test_properties(self, piecewise):
        assert piecewise.a == 0.0 and piecewise.b == 2.0
        assert piecewise.n_intervals == 3
        assert piecewise.interval(1).a == 0.5

    def test_out_of_domain(self, piecewise):
        with pytest.raises(OutOfDomain):
            piecewise(2.5)
