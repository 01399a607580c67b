"""
Appell's equation m''' + 4 w^2 q m' + 2 w^2 q' m = 0 on one interval

The modulus m = 1/alpha' of a trigonometric phase function solves it.
Initial and terminal value problems are solved through an integral
equation for sigma = m''.
"""
from typing import Tuple

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from ..core.chebyshev import ChebGrid
from ..core.errors import DegeneratePhase, SingularSystem, InvalidConfig, NumericFailure
from ..core.models import AppellIVPData, Side


def alpha_third(apval: float, appval: float, qval_scaled: float) -> float:
    """
    alpha''' forced by Kummer's equation

    Args:
        apval: alpha' at the point
        appval: alpha'' at the point
        qval_scaled: omega^2 q at the point
    """
    if not apval > 0.0:
        raise DegeneratePhase(f"alpha' must be positive, got {apval}")
    return (4.0 * qval_scaled * apval ** 2 - 4.0 * apval ** 4 + 3.0 * appval ** 2) / (2.0 * apval)


def phase_to_m(apval: float, appval: float, apppval: float) -> Tuple[float, float, float]:
    """Converts (alpha', alpha'', alpha''') at a point into (m, m', m'')"""
    if not apval > 0.0:
        raise DegeneratePhase(f"alpha' must be positive, got {apval}")
    m0 = 1.0 / apval
    mp0 = -appval / apval ** 2
    mpp0 = 2.0 * appval ** 2 / apval ** 3 - apppval / apval ** 2
    return m0, mp0, mpp0


def m_to_phase(m: np.ndarray, mp: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Converts samples of (m, m') into (alpha', alpha'')"""
    m = np.asarray(m, dtype=float)
    if np.any(m <= 0.0):
        raise DegeneratePhase(f"modulus has non-positive value {m.min():.3e}")
    ap = 1.0 / m
    return ap, -ap * ap * np.asarray(mp, dtype=float)


def _solve(grid: ChebGrid, a: float, b: float, q: np.ndarray, omega: float,
           data: AppellIVPData) -> Tuple[np.ndarray, np.ndarray]:
    if not b > a:
        raise InvalidConfig(f"empty interval [{a}, {b}]")
    w2 = omega * omega
    q = np.asarray(q, dtype=float)
    qp = grid.derivative(q, a, b)
    j1 = grid.integration_operator(a, b, from_right=data.side is Side.RIGHT_ENTRY)
    j2 = j1 @ j1
    j3 = j2 @ j1

    t = grid.points(a, b)
    tc = t - (a if data.side is Side.LEFT_ENTRY else b)
    m0, mp0, mpp0 = data.m0, data.mp0, data.mpp0

    A = np.eye(grid.k) + (4.0 * w2 * q)[:, None] * j2 + (2.0 * w2 * qp)[:, None] * j3
    y = -4.0 * w2 * (mp0 * q + mpp0 * q * tc) \
        - 2.0 * w2 * (m0 * qp + mp0 * qp * tc + 0.5 * mpp0 * qp * tc * tc)

    if not np.all(np.isfinite(A)) or not np.all(np.isfinite(y)):
        raise NumericFailure(f"non-finite Appell system on [{a}, {b}]")
    lu, piv = lu_factor(A, check_finite=False)
    if np.any(np.diag(lu) == 0.0):
        raise SingularSystem(f"singular Appell matrix on [{a}, {b}]")
    sigma = lu_solve((lu, piv), y, check_finite=False)

    m = m0 + mp0 * tc + 0.5 * mpp0 * tc * tc + j3 @ sigma
    mp = mp0 + mpp0 * tc + j2 @ sigma
    if np.any(m <= 0.0):
        raise DegeneratePhase(f"Appell solution is non-positive on [{a}, {b}]")
    return m, mp


def solve_ivp(grid: ChebGrid, a: float, b: float, q: np.ndarray, omega: float,
              data: AppellIVPData) -> Tuple[np.ndarray, np.ndarray]:
    """
    Initial value problem with (m, m', m'') given at a

    Returns:
        Samples (m, m') at the mapped nodes
    """
    if data.side is not Side.LEFT_ENTRY:
        raise InvalidConfig("solve_ivp needs left-entry data")
    return _solve(grid, a, b, q, omega, data)


def solve_tvp(grid: ChebGrid, a: float, b: float, q: np.ndarray, omega: float,
              data: AppellIVPData) -> Tuple[np.ndarray, np.ndarray]:
    """
    Terminal value problem with (m, m', m'') given at b

    Returns:
        Samples (m, m') at the mapped nodes
    """
    if data.side is not Side.RIGHT_ENTRY:
        raise InvalidConfig("solve_tvp needs right-entry data")
    return _solve(grid, a, b, q, omega, data)


def appell_residual(grid: ChebGrid, a: float, b: float, q: np.ndarray,
                    omega: float, m: np.ndarray) -> np.ndarray:
    """m''' + 4 w^2 q m' + 2 w^2 q' m via spectral differentiation"""
    mp = grid.derivative(m, a, b)
    mppp = grid.derivative(grid.derivative(mp, a, b), a, b)
    qp = grid.derivative(q, a, b)
    return mppp + 4.0 * omega ** 2 * q * mp + 2.0 * omega ** 2 * qp * m
