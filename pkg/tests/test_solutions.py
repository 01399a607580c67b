"""Tests for the solution basis and initial/boundary value fitting"""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.coefficients.catalog import LegendreCoefficient
from src.core.errors import IllConditionedBC, NumericFailure, OutOfDomain
from src.core.models import SolutionCoeffs, BoundaryConditions
from src.reference import legendre_function, legendre_normal_solutions, spectral_reference_solve
from src.solver import basis_at, wronskian, fit_ivp, fit_bvp, eval_solution, build_phase


class TestBasis:
    def test_at_left_endpoint(self, constant_phase):
        u, up, v, vp = basis_at(constant_phase, 0.0)
        assert u == pytest.approx(0.0, abs=1e-13)
        assert v == pytest.approx(0.1, rel=1e-13)
        assert up == pytest.approx(10.0, rel=1e-13)
        assert vp == pytest.approx(0.0, abs=1e-9)

    def test_quarter_period(self, constant_phase):
        u, up, v, vp = basis_at(constant_phase, np.pi / 200)
        assert u == pytest.approx(0.1, rel=1e-12)
        assert v == pytest.approx(0.0, abs=1e-12)
        assert up == pytest.approx(0.0, abs=1e-9)
        assert vp == pytest.approx(-10.0, rel=1e-12)

    @pytest.mark.parametrize("phase_name", ["constant_phase", "smooth_phase", "legendre_phase"])
    def test_wronskian(self, request, phase_name):
        phase = request.getfixturevalue(phase_name)
        t = np.linspace(phase.a, phase.b, 257)
        assert np.abs(wronskian(phase, t) + 1.0).max() <= 1e-10


class TestFitIVP:
    def test_cosine(self, constant_phase):
        coeffs = fit_ivp(constant_phase, 0.0, 1.0, 0.0)
        assert coeffs.c1 == pytest.approx(0.0, abs=1e-12)
        assert coeffs.c2 == pytest.approx(10.0, rel=1e-12)
        t = np.linspace(0.0, 1.0, 1000)
        y, yp = eval_solution(constant_phase, coeffs, t)
        assert np.abs(y - np.cos(100.0 * t)).max() < 1e-11
        assert np.abs(yp + 100.0 * np.sin(100.0 * t)).max() < 1e-9

    def test_sine(self, constant_phase):
        coeffs = fit_ivp(constant_phase, 0.0, 0.0, 100.0)
        assert coeffs.c1 == pytest.approx(10.0, rel=1e-12)
        assert coeffs.c2 == pytest.approx(0.0, abs=1e-12)

    def test_interior_point(self, smooth_phase):
        coeffs = fit_ivp(smooth_phase, 0.37, 0.5, -2.0)
        y, yp = eval_solution(smooth_phase, coeffs, 0.37)
        assert y == pytest.approx(0.5, rel=1e-12)
        assert yp == pytest.approx(-2.0, rel=1e-10)

    def test_legendre_first_kind(self):
        n = 64
        phase = build_phase(LegendreCoefficient(n), 1.0, 0.0, 0.9)
        scale = np.sqrt(0.5 * np.pi)
        y1, y1p, _, _ = legendre_normal_solutions(n, 0.0)
        coeffs = fit_ivp(phase, 0.0, scale * y1, scale * y1p)
        t = np.linspace(0.0, 0.9, 100)
        expected = scale * legendre_normal_solutions(n, t)[0]
        y, _ = eval_solution(phase, coeffs, t)
        assert np.abs(y - expected).max() <= 1e-10 * np.abs(expected).max()

    def test_outside_domain(self, constant_phase):
        with pytest.raises(OutOfDomain):
            fit_ivp(constant_phase, 2.0, 1.0, 0.0)

    def test_non_finite_data(self, constant_phase):
        with pytest.raises(NumericFailure):
            fit_ivp(constant_phase, 0.0, np.inf, 0.0)


class TestFitBVP:
    def test_cosine(self, constant_phase):
        coeffs = fit_bvp(constant_phase, 1.0, np.cos(100.0))
        assert coeffs.c1 == pytest.approx(0.0, abs=1e-9)
        assert coeffs.c2 == pytest.approx(10.0, rel=1e-10)

    def test_homogeneous(self, constant_phase):
        coeffs = fit_bvp(constant_phase, 0.0, 0.0)
        assert coeffs.c1 == 0.0 and coeffs.c2 == 0.0

    def test_conjugate_points(self, constant_spec):
        # sin(omega t) vanishes at both ends when omega = 10 pi
        phase = build_phase(constant_spec, 10.0 * np.pi, 0.0, 1.0)
        with pytest.raises(IllConditionedBC):
            fit_bvp(phase, 0.0, 1.0)

    def test_matches_reference_solver(self, bvp_phase, bvp_spec):
        coeffs = fit_bvp(bvp_phase, 1.0, 1.0)
        reference = spectral_reference_solve(bvp_spec, 64.0, -1.0, 1.0,
                                             BoundaryConditions(ya=1.0, yb=1.0))
        t = np.linspace(-1.0, 1.0, 1000)
        y, _ = eval_solution(bvp_phase, coeffs, t)
        assert np.abs(y - reference.evaluate(t)[0]).max() <= 1e-8
        assert y[0] == pytest.approx(1.0, abs=1e-10)
        assert y[-1] == pytest.approx(1.0, abs=1e-10)


class TestEvalSolution:
    def test_zero_coefficients(self, smooth_phase):
        y, yp = eval_solution(smooth_phase, SolutionCoeffs(0.0, 0.0), np.linspace(0, 1, 5))
        assert_allclose(y, 0.0)
        assert_allclose(yp, 0.0)

    def test_legendre_condition_number(self, legendre_phase):
        n = 1024
        t0 = 0.5
        y1, y1p, y2, y2p = legendre_normal_solutions(n, t0)
        fit_p = fit_ivp(legendre_phase, t0, y1, y1p)
        fit_q = fit_ivp(legendre_phase, t0, y2, y2p)
        t = np.linspace(0.0, 0.9, 200)
        root = np.sqrt((1.0 - t) * (1.0 + t))
        approx = (eval_solution(legendre_phase, fit_p, t)[0]
                  + 1j * eval_solution(legendre_phase, fit_q, t)[0]) / root
        oracle = legendre_function(n, t)
        err = np.abs(approx - oracle.values) / np.abs(oracle.values)
        assert err.max() <= 100.0 * oracle.cond_max

    def test_satisfies_equation(self, smooth_spec):
        omega = 50.0
        phase = build_phase(smooth_spec, omega, 0.0, 1.0)
        coeffs = fit_ivp(phase, 0.0, 1.0, 0.5)
        h = 1e-5
        t = np.linspace(0.01, 0.99, 97)
        y, _ = eval_solution(phase, coeffs, t)
        _, yp_plus = eval_solution(phase, coeffs, t + h)
        _, yp_minus = eval_solution(phase, coeffs, t - h)
        ypp = (yp_plus - yp_minus) / (2.0 * h)
        res = ypp + omega ** 2 * smooth_spec.sample(t, omega) * y
        assert np.abs(res).max() <= 1e-6 * omega ** 2 * np.abs(y).max()

    def test_linear_in_coefficients(self, smooth_phase, rng):
        t = rng.uniform(0.0, 1.0, 50)
        first, second = SolutionCoeffs(1.5, -0.25), SolutionCoeffs(-2.0, 3.0)
        combined = SolutionCoeffs(2.0 * 1.5 + 3.0 * -2.0, 2.0 * -0.25 + 3.0 * 3.0)
        y1, yp1 = eval_solution(smooth_phase, first, t)
        y2, yp2 = eval_solution(smooth_phase, second, t)
        y, yp = eval_solution(smooth_phase, combined, t)
        assert_allclose(y, 2.0 * y1 + 3.0 * y2, rtol=1e-12, atol=1e-14)
        assert_allclose(yp, 2.0 * yp1 + 3.0 * yp2, rtol=1e-12, atol=1e-11)
