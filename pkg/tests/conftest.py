"""Shared fixtures; expensive phase functions are built once per session"""
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.coefficients import parse
from src.coefficients.catalog import LegendreCoefficient, OscillatoryBVPCoefficient
from src.core.chebyshev import make_grid
from src.core.models import SolverConfig
from src.solver import build_phase

LEGENDRE_B = 1.0 - 1.0e-7


@pytest.fixture(scope="session")
def grid():
    return make_grid(16)


@pytest.fixture(scope="session")
def config():
    return SolverConfig()


@pytest.fixture(scope="session")
def constant_spec():
    return parse("1")


@pytest.fixture(scope="session")
def constant_phase(constant_spec):
    """q = 1, omega = 100 on [0, 1]"""
    return build_phase(constant_spec, 100.0, 0.0, 1.0)


@pytest.fixture(scope="session")
def smooth_spec():
    return parse("1 + t^2/2")


@pytest.fixture(scope="session")
def smooth_phase(smooth_spec):
    """q = 1 + t^2/2, omega = 1000 on [0, 1]"""
    return build_phase(smooth_spec, 1000.0, 0.0, 1.0)


@pytest.fixture(scope="session")
def legendre_spec():
    return LegendreCoefficient(1024)


@pytest.fixture(scope="session")
def legendre_phase(legendre_spec):
    """Legendre normal form, n = 1024, on [0, 1 - 1e-7]"""
    return build_phase(legendre_spec, 1.0, 0.0, LEGENDRE_B)


@pytest.fixture(scope="session")
def bvp_spec():
    return OscillatoryBVPCoefficient()


@pytest.fixture(scope="session")
def bvp_phase(bvp_spec):
    """Boundary value test coefficient, omega = 64, on [-1, 1]"""
    return build_phase(bvp_spec, 64.0, -1.0, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
