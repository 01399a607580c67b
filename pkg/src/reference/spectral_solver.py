"""
Adaptive Chebyshev spectral solver for y'' + omega^2 q y = 0

A conventional reference method: the full oscillatory equation is
solved directly, so the number of intervals (and the cost) grows
with omega. On each interval the integral equation

    sigma + omega^2 q J^2 sigma = -omega^2 q (y0 + y0' (t - t0)),   y'' = sigma

is solved by dense LU. Intervals are marched outward from the point where
data is given; a step is accepted when y and y' both pass the fit test.
"""
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from ..core.chebyshev import ChebGrid, make_grid, fit_ratio, PiecewiseChebyshev
from ..core.errors import InvalidConfig, NonConvergentRefinement, IllConditionedBC, SingularSystem
from ..core.interfaces import CoefficientSpec
from ..core.logging_config import get_logger
from ..core.models import InitialConditions, BoundaryConditions

logger = get_logger(__name__)

# Relative determinant below which boundary conditions are rejected
BVP_DET_TOL = 1.0e-12


@dataclass(frozen=True, eq=False)
class ReferenceSolution:
    """Piecewise Chebyshev representation of y and y'"""
    y: PiecewiseChebyshev
    yp: PiecewiseChebyshev

    @property
    def n_intervals(self) -> int:
        return self.y.n_intervals

    def evaluate(self, t) -> Tuple:
        """Returns (y(t), y'(t))"""
        return self.y(t), self.yp(t)


@dataclass
class _Piece:
    a: float
    b: float
    y: np.ndarray   # (k, s) samples of s simultaneous solutions
    yp: np.ndarray


def _local_solve(grid: ChebGrid, c: float, d: float, q: np.ndarray, omega: float,
                 y0: np.ndarray, yp0: np.ndarray, from_right: bool) -> Tuple[np.ndarray, np.ndarray]:
    j1 = grid.integration_operator(c, d, from_right=from_right)
    j2 = j1 @ j1
    tc = grid.points(c, d) - (d if from_right else c)
    w2q = omega * omega * q
    A = np.eye(grid.k) + w2q[:, None] * j2
    base = y0[None, :] + tc[:, None] * yp0[None, :]
    lu, piv = lu_factor(A, check_finite=False)
    if np.any(np.diag(lu) == 0.0):
        raise SingularSystem(f"singular collocation matrix on [{c}, {d}]")
    sigma = lu_solve((lu, piv), -w2q[:, None] * base, check_finite=False)
    return base + j2 @ sigma, yp0[None, :] + j1 @ sigma


def _march(spec: CoefficientSpec, omega: float, grid: ChebGrid, start: float, stop: float,
           y0: np.ndarray, yp0: np.ndarray, tol: float, max_depth: int) -> List[_Piece]:
    """Marches from start to stop, halving rejected steps and doubling accepted ones"""
    pieces: List[_Piece] = []
    forward = stop > start
    min_len = abs(stop - start) * 2.0 ** (-max_depth)
    c, h = start, stop - start
    while c != stop:
        d = stop if abs(stop - c) <= abs(h) else c + h
        lo, hi = (c, d) if forward else (d, c)
        q = spec.sample(grid.points(lo, hi), omega)
        y, yp = _local_solve(grid, lo, hi, q, omega, y0, yp0, from_right=not forward)
        worst = max(max(fit_ratio(grid, y[:, s]), fit_ratio(grid, yp[:, s]))
                    for s in range(y.shape[1]))
        if worst < tol:
            pieces.append(_Piece(a=lo, b=hi, y=y, yp=yp))
            end = -1 if forward else 0
            y0, yp0 = y[end].copy(), yp[end].copy()
            c = d
            h = 2.0 * h
        else:
            h = 0.5 * h
            if abs(h) < min_len:
                raise NonConvergentRefinement(f"reference step below {min_len:.3e} near t={c}")
    if not forward:
        pieces.reverse()
    return pieces


def _assemble(grid: ChebGrid, pieces: List[_Piece], weights: np.ndarray) -> ReferenceSolution:
    breakpoints = np.array([p.a for p in pieces] + [pieces[-1].b])
    y = np.array([grid.vals2coefs @ (p.y @ weights) for p in pieces])
    yp = np.array([grid.vals2coefs @ (p.yp @ weights) for p in pieces])
    return ReferenceSolution(y=PiecewiseChebyshev(breakpoints, y),
                             yp=PiecewiseChebyshev(breakpoints, yp))


def spectral_reference_solve(spec: CoefficientSpec, omega: float, a: float, b: float,
                             bc: Union[InitialConditions, BoundaryConditions],
                             tol: float = 1.0e-12, k: int = 16,
                             max_depth: int = 60) -> ReferenceSolution:
    """
    Solves an initial or boundary value problem on [a, b]

    Args:
        spec: Coefficient q
        omega: Frequency
        a, b: Solution domain
        bc: InitialConditions (t0 in [a, b]) or BoundaryConditions
        tol: Fit-test tolerance for accepting an interval
        k: Chebyshev nodes per interval
        max_depth: Cap on the number of step halvings

    Returns:
        ReferenceSolution on [a, b]
    """
    if not b > a:
        raise InvalidConfig(f"empty interval [{a}, {b}]")
    grid = make_grid(k)

    if isinstance(bc, InitialConditions):
        if not a <= bc.t0 <= b:
            raise InvalidConfig(f"t0={bc.t0} outside [{a}, {b}]")
        y0, yp0 = np.array([bc.y0], dtype=float), np.array([bc.yp0], dtype=float)
        pieces: List[_Piece] = []
        if bc.t0 > a:
            pieces += _march(spec, omega, grid, bc.t0, a, y0, yp0, tol, max_depth)
        if bc.t0 < b:
            pieces += _march(spec, omega, grid, bc.t0, b, y0, yp0, tol, max_depth)
        solution = _assemble(grid, pieces, np.array([1.0]))
    elif isinstance(bc, BoundaryConditions):
        pieces = _march(spec, omega, grid, a, b, np.array([1.0, 0.0]), np.array([0.0, 1.0]),
                        tol, max_depth)
        y1b, y2b = pieces[-1].y[-1]
        scale = np.hypot(y1b, y2b)
        if abs(y2b) < BVP_DET_TOL * scale:
            raise IllConditionedBC(f"boundary determinant {y2b:.3e} relative to {scale:.3e}")
        s = (bc.yb - bc.ya * y1b) / y2b
        solution = _assemble(grid, pieces, np.array([bc.ya, s]))
    else:
        raise InvalidConfig(f"unsupported conditions {bc!r}")

    logger.debug(f"reference solve for {spec.get_name()} at omega={omega}: "
                 f"{solution.n_intervals} intervals")
    return solution
