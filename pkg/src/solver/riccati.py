"""
Riccati equation r' + r^2 + omega^2 q = 0 on one interval

Collocated on the extremal grid and solved by Newton-Kantorovich,
each linearized system approximated by the second fixed-point iterate.
"""
import math

import numpy as np

from ..core.chebyshev import ChebGrid
from ..core.errors import QNotPositive, SingularLinearization, NewtonDivergence
from ..core.logging_config import get_logger
from ..core.models import SolverConfig, RiccatiResult

logger = get_logger(__name__)


def lg_samples(q: np.ndarray, qp: np.ndarray, omega: float) -> np.ndarray:
    """
    Liouville-Green seed r_LG = i omega sqrt(q) - q'/(4 q)

    Args:
        q: Coefficient samples (must be positive)
        qp: Derivative samples of q
        omega: Frequency

    Returns:
        Complex samples of r_LG
    """
    q = np.asarray(q, dtype=float)
    if np.any(q <= 0.0):
        raise QNotPositive(f"q has non-positive node value {q.min():.3e}")
    return 1j * omega * np.sqrt(q) - np.asarray(qp, dtype=float) / (4.0 * q)


def residual(grid: ChebGrid, a: float, b: float, r: np.ndarray,
             q: np.ndarray, omega: float) -> np.ndarray:
    """F(r) = (2/(b-a)) D r + r*r + omega^2 q"""
    return grid.derivative(r, a, b) + r * r + omega * omega * q


def linearized_step(grid: ChebGrid, a: float, b: float,
                    r: np.ndarray, Fr: np.ndarray) -> np.ndarray:
    """
    Second fixed-point iterate for (diag(2r) + (2/(b-a)) D) h = -F(r)

    h = diag(2r)^-1 (diag(2r)^-1 (2/(b-a)) D - I) F(r)
    """
    if np.any(r == 0):
        raise SingularLinearization("Riccati iterate has a zero entry")
    inv2r = 1.0 / (2.0 * r)
    return inv2r * (inv2r * grid.derivative(Fr, a, b) - Fr)


def newton_solve(grid: ChebGrid, a: float, b: float, q: np.ndarray,
                 omega: float, config: SolverConfig) -> RiccatiResult:
    """
    Solves the collocated Riccati equation on [a, b]

    Args:
        grid: Chebyshev grid
        a, b: Interval endpoints
        q: Coefficient samples at the mapped nodes
        omega: Frequency
        config: Solver configuration (eps, max_newton)

    Returns:
        RiccatiResult with the converged samples and the update history
    """
    qp = grid.derivative(q, a, b)
    r = lg_samples(q, qp, omega)
    norms = []
    for iteration in range(1, config.max_newton + 1):
        h = linearized_step(grid, a, b, r, residual(grid, a, b, r, q, omega))
        h_norm = float(np.max(np.abs(h)))
        r_norm = float(np.max(np.abs(r)))
        norms.append(h_norm)
        r = r + h
        if not math.isfinite(h_norm):
            raise NewtonDivergence(f"non-finite Newton update on [{a}, {b}]")
        if h_norm <= config.eps * r_norm:
            if np.any(r.imag <= 0.0):
                raise NewtonDivergence(f"converged Riccati solution has Im(r) <= 0 on [{a}, {b}]")
            logger.debug(f"Riccati [{a:.6g}, {b:.6g}] converged in {iteration} iterations")
            return RiccatiResult(r=r, iterations=iteration, final_update_norm=h_norm,
                                 update_norms=norms)
    raise NewtonDivergence(
        f"no convergence on [{a}, {b}] after {config.max_newton} iterations "
        f"(last update {norms[-1]:.3e})")


def gamma(q_min: float, omega: float, a: float, b: float) -> float:
    """High-frequency indicator omega sqrt(q_min) (b - a)"""
    return omega * math.sqrt(max(q_min, 0.0)) * (b - a)
