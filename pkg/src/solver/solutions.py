"""
Solutions of y'' + omega^2 q y = 0 from a phase function

Basis u = sin(alpha)/sqrt(alpha'), v = cos(alpha)/sqrt(alpha');
the pair has Wronskian u v' - v u' = -1.
"""
from typing import Tuple

import numpy as np

from ..core.errors import NumericFailure, IllConditionedBC
from ..core.models import PiecewisePhase, SolutionCoeffs

# Relative determinant below which boundary conditions are rejected
BVP_DET_TOL = 1.0e-12


def basis_at(phase: PiecewisePhase, t) -> Tuple:
    """
    Evaluates the basis and its derivative at t

    Returns:
        Tuple (u, u', v, v')
    """
    alpha = phase.alpha(t)
    ap = phase.alpha_p(t)
    app = phase.alpha_pp(t)
    s, c = np.sin(alpha), np.cos(alpha)
    root = np.sqrt(ap)
    skew = app / (2.0 * ap * root)
    u = s / root
    v = c / root
    up = c * root - s * skew
    vp = -s * root - c * skew
    return u, up, v, vp


def wronskian(phase: PiecewisePhase, t):
    """u v' - v u' at t (equals -1 for an exact phase function)"""
    u, up, v, vp = basis_at(phase, t)
    return u * vp - v * up


def _check_finite(*values):
    if not all(np.isfinite(values)):
        raise NumericFailure(f"non-finite problem data {values}")


def fit_ivp(phase: PiecewisePhase, t0: float, y0: float, yp0: float) -> SolutionCoeffs:
    """
    Coefficients of the solution with y(t0) = y0, y'(t0) = yp0

    The system matrix has determinant -1, so it is always solvable.
    """
    _check_finite(t0, y0, yp0)
    u, up, v, vp = basis_at(phase, t0)
    c1, c2 = np.linalg.solve(np.array([[u, v], [up, vp]]), np.array([y0, yp0]))
    return SolutionCoeffs(c1=float(c1), c2=float(c2))


def fit_bvp(phase: PiecewisePhase, ya: float, yb: float) -> SolutionCoeffs:
    """
    Coefficients of the solution with y(a) = ya, y(b) = yb

    Raises IllConditionedBC when a and b are (nearly) conjugate points.
    """
    _check_finite(ya, yb)
    ua, _, va, _ = basis_at(phase, phase.a)
    ub, _, vb, _ = basis_at(phase, phase.b)
    mat = np.array([[ua, va], [ub, vb]])
    det = np.linalg.det(mat)
    scale = np.linalg.norm(mat[0]) * np.linalg.norm(mat[1])
    if abs(det) < BVP_DET_TOL * scale:
        raise IllConditionedBC(f"boundary matrix determinant {det:.3e} relative to {scale:.3e}")
    c1, c2 = np.linalg.solve(mat, np.array([ya, yb]))
    return SolutionCoeffs(c1=float(c1), c2=float(c2))


def eval_solution(phase: PiecewisePhase, coeffs: SolutionCoeffs, t) -> Tuple:
    """
    Evaluates y = c1 u + c2 v and its derivative at t

    Returns:
        Tuple (y, y')
    """
    u, up, v, vp = basis_at(phase, t)
    return coeffs.c1 * u + coeffs.c2 * v, coeffs.c1 * up + coeffs.c2 * vp
