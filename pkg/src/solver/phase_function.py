"""
Construction of a nonoscillatory trigonometric phase function

The build runs in four stages:
  1. adaptive discretization of q
  2. left-to-right sweep: Riccati on high-frequency intervals,
     Appell initial value problems to the right of solved intervals
  3. right-to-left sweep: Appell terminal value problems
  4. spectral integration of alpha'
"""
from dataclasses import replace
from typing import List, Tuple

import numpy as np

from ..core.chebyshev import ChebGrid, make_grid, fit_ratio, sampling_floor, PiecewiseChebyshev
from ..core.errors import (InvalidConfig, QNotPositive, NewtonDivergence,
                           DegeneratePhase, SingularSystem, NonConvergentRefinement,
                           NoHighFrequencyInterval)
from ..core.interfaces import CoefficientSpec
from ..core.logging_config import get_logger
from ..core.models import (SolverConfig, ChebInterval, Provenance, AppellIVPData, Side,
                           PiecewisePhase)
from . import appell, riccati

logger = get_logger(__name__)

# Failures that are retried on the two halves of the interval
_RECOVERABLE = (NewtonDivergence, DegeneratePhase, SingularSystem)


def _sample_positive(spec: CoefficientSpec, grid: ChebGrid, a: float, b: float,
                     omega: float) -> np.ndarray:
    q = spec.sample(grid.points(a, b), omega)
    if np.any(q <= 0.0):
        raise QNotPositive(f"q is not positive on [{a}, {b}] (min {q.min():.3e})")
    return q


def _resolved(grid: ChebGrid, vals: np.ndarray, dvals: np.ndarray, a: float, b: float,
              eps: float) -> bool:
    """fit_ratio below eps, or below the rounding floor of the samples when that is larger"""
    floor = min(sampling_floor(grid, vals, dvals, a, b), np.sqrt(eps))
    return fit_ratio(grid, vals) < max(eps, floor)


def _check_depth(depth: int, a: float, b: float, config: SolverConfig):
    if depth > config.max_depth:
        raise NonConvergentRefinement(
            f"interval [{a}, {b}] needs more than {config.max_depth} bisections")


def discretize_coefficient(spec: CoefficientSpec, omega: float, a: float, b: float,
                           config: SolverConfig) -> List[ChebInterval]:
    """
    Stage 1: bisects [a, b] until q is well fit on every interval

    Returns:
        Ascending list of intervals carrying their q samples
    """
    if not b > a:
        raise InvalidConfig(f"empty interval [{a}, {b}]")
    grid = make_grid(config.k)
    todo: List[Tuple[float, float, int]] = [(a, b, 0)]
    accepted: List[ChebInterval] = []
    while todo:
        c, d, depth = todo.pop()
        q = spec.sample(grid.points(c, d), omega)
        if _resolved(grid, q, grid.derivative(q, c, d), c, d, config.eps):
            if np.any(q <= 0.0):
                raise QNotPositive(f"q is not positive on [{c}, {d}] (min {q.min():.3e})")
            accepted.append(ChebInterval(a=c, b=d, depth=depth, q=q))
            continue
        _check_depth(depth + 1, c, d, config)
        mid = 0.5 * (c + d)
        todo.append((mid, d, depth + 1))
        todo.append((c, mid, depth + 1))
    accepted.sort(key=lambda iv: iv.a)
    logger.debug(f"stage 1: {len(accepted)} intervals for {spec.get_name()}")
    return accepted


def _bisect(interval: ChebInterval, spec: CoefficientSpec, grid: ChebGrid,
            omega: float, config: SolverConfig) -> Tuple[ChebInterval, ChebInterval]:
    c, d = interval.a, interval.b
    depth = interval.depth + 1
    _check_depth(depth, c, d, config)
    mid = 0.5 * (c + d)
    left = ChebInterval(a=c, b=mid, depth=depth, q=_sample_positive(spec, grid, c, mid, omega))
    right = ChebInterval(a=mid, b=d, depth=depth, q=_sample_positive(spec, grid, mid, d, omega))
    return left, right


def _solve_riccati(interval: ChebInterval, grid: ChebGrid, omega: float,
                   config: SolverConfig):
    result = riccati.newton_solve(grid, interval.a, interval.b, interval.q, omega, config)
    ap = result.r.imag
    app = -2.0 * ap * result.r.real
    return ap, app


def _solve_appell(interval: ChebInterval, grid: ChebGrid, omega: float,
                  apval: float, appval: float, side: Side):
    c, d = interval.a, interval.b
    qval = interval.q[0] if side is Side.LEFT_ENTRY else interval.q[-1]
    apppval = appell.alpha_third(apval, appval, omega * omega * qval)
    m0, mp0, mpp0 = appell.phase_to_m(apval, appval, apppval)
    data = AppellIVPData(m0=m0, mp0=mp0, mpp0=mpp0, side=side)
    if side is Side.LEFT_ENTRY:
        m, mp = appell.solve_ivp(grid, c, d, interval.q, omega, data)
    else:
        m, mp = appell.solve_tvp(grid, c, d, interval.q, omega, data)
    return appell.m_to_phase(m, mp)


def sweep_left_right(intervals: List[ChebInterval], spec: CoefficientSpec, omega: float,
                     config: SolverConfig) -> List[ChebInterval]:
    """
    Stage 2: left-to-right sweep

    Riccati on high-frequency intervals, Appell initial value problems on
    low-frequency intervals whose left neighbour is solved. Unsolved
    intervals are passed through for stage 3.
    """
    grid = make_grid(config.k)
    todo = list(reversed(intervals))  # left-most interval on top
    output: List[ChebInterval] = []
    while todo:
        interval = todo.pop()
        c, d = interval.a, interval.b
        g = riccati.gamma(float(interval.q.min()), omega, c, d)
        left = output[-1] if output else None
        try:
            if g > config.thresh:
                ap, app = _solve_riccati(interval, grid, omega, config)
                provenance = Provenance.RICCATI
            elif left is not None and left.solved:
                ap, app = _solve_appell(interval, grid, omega, float(left.ap[-1]),
                                        float(left.app[-1]), Side.LEFT_ENTRY)
                provenance = Provenance.APPELL_IVP
            else:
                output.append(interval)
                continue
        except _RECOVERABLE as e:
            logger.warning(f"stage 2: bisecting [{c:.6g}, {d:.6g}] after {e.name}: {e}")
            lhalf, rhalf = _bisect(interval, spec, grid, omega, config)
            todo.extend([rhalf, lhalf])
            continue

        if _resolved(grid, ap, app, c, d, config.eps):
            output.append(replace(interval, ap=ap, app=app, provenance=provenance))
        else:
            lhalf, rhalf = _bisect(interval, spec, grid, omega, config)
            todo.extend([rhalf, lhalf])
    solved = sum(iv.solved for iv in output)
    logger.debug(f"stage 2: {solved} of {len(output)} intervals solved")
    return output


def sweep_right_left(partial: List[ChebInterval], spec: CoefficientSpec, omega: float,
                     config: SolverConfig) -> List[ChebInterval]:
    """
    Stage 3: right-to-left sweep filling unsolved intervals with Appell
    terminal value problems
    """
    if not any(iv.solved for iv in partial):
        raise NoHighFrequencyInterval(
            "no discretization interval is in the high-frequency regime; "
            "increase omega or lower thresh")
    if all(iv.solved for iv in partial):
        return list(partial)
    grid = make_grid(config.k)
    todo = list(partial)  # right-most interval on top
    output: List[ChebInterval] = []
    while todo:
        interval = todo.pop()
        if interval.solved:
            output.append(interval)
            continue
        right = output[-1] if output else None
        if right is None or not right.solved:
            raise NoHighFrequencyInterval(f"no solved interval to the right of [{interval.a}, {interval.b}]")
        try:
            ap, app = _solve_appell(interval, grid, omega, float(right.ap[0]),
                                    float(right.app[0]), Side.RIGHT_ENTRY)
        except _RECOVERABLE as e:
            logger.warning(f"stage 3: bisecting [{interval.a:.6g}, {interval.b:.6g}] after {e.name}: {e}")
            lhalf, rhalf = _bisect(interval, spec, grid, omega, config)
            todo.extend([lhalf, rhalf])
            continue
        if _resolved(grid, ap, app, interval.a, interval.b, config.eps):
            output.append(replace(interval, ap=ap, app=app, provenance=Provenance.APPELL_TVP))
        else:
            lhalf, rhalf = _bisect(interval, spec, grid, omega, config)
            todo.extend([lhalf, rhalf])
    output.reverse()
    logger.debug(f"stage 3: {len(output)} intervals after right-to-left sweep")
    return output


def integrate_phase(intervals: List[ChebInterval], omega: float,
                    config: SolverConfig) -> PiecewisePhase:
    """
    Stage 4: spectral integration of alpha', with alpha(a) = 0

    Returns:
        PiecewisePhase storing alpha, alpha', alpha'' expansions
    """
    grid = make_grid(config.k)
    if any(not iv.solved for iv in intervals):
        raise NoHighFrequencyInterval("stage 4 reached with unsolved intervals")
    m = len(intervals)
    breakpoints = np.empty(m + 1)
    alpha = np.empty((m, grid.k))
    alpha_p = np.empty((m, grid.k))
    alpha_pp = np.empty((m, grid.k))
    aval = 0.0
    for j, iv in enumerate(intervals):
        a_samples = aval + grid.antiderivative(iv.ap, iv.a, iv.b)
        aval = float(a_samples[-1])
        breakpoints[j] = iv.a
        alpha[j] = grid.vals2coefs @ a_samples
        alpha_p[j] = grid.vals2coefs @ iv.ap
        alpha_pp[j] = grid.vals2coefs @ iv.app
    breakpoints[m] = intervals[-1].b
    return PiecewisePhase(
        omega=float(omega),
        k=grid.k,
        alpha=PiecewiseChebyshev(breakpoints, alpha),
        alpha_p=PiecewiseChebyshev(breakpoints, alpha_p),
        alpha_pp=PiecewiseChebyshev(breakpoints, alpha_pp),
        provenance=tuple(iv.provenance for iv in intervals),
    )


def build_phase(spec: CoefficientSpec, omega: float, a: float, b: float,
                config: SolverConfig = SolverConfig()) -> PiecewisePhase:
    """
    Builds a phase function for y'' + omega^2 q(t, omega) y = 0 on [a, b]

    Args:
        spec: Coefficient q
        omega: Frequency
        a, b: Solution domain
        config: Solver configuration

    Returns:
        PiecewisePhase on [a, b]
    """
    if not b > a:
        raise InvalidConfig(f"empty interval [{a}, {b}]")
    if not omega > 0.0:
        raise InvalidConfig(f"omega must be positive, got {omega}")
    intervals = discretize_coefficient(spec, omega, a, b, config)
    partial = sweep_left_right(intervals, spec, omega, config)
    complete = sweep_right_left(partial, spec, omega, config)
    phase = integrate_phase(complete, omega, config)
    logger.debug(f"built phase on [{a}, {b}] with {phase.n_intervals} intervals")
    return phase


def eval_phase(phase: PiecewisePhase, t, which="alpha"):
    """
    Evaluates alpha, alpha_p or alpha_pp at t

    Shared interval endpoints are evaluated on the left interval.
    """
    return phase.quantity(which)(t)


def kummer_residual(phase: PiecewisePhase, spec: CoefficientSpec) -> List[np.ndarray]:
    """
    Kummer residual at the interior nodes of every interval, divided by omega^2 q

    (alpha')^2 - w^2 q - (3/4)(alpha''/alpha')^2 + (1/2) alpha'''/alpha',
    with alpha''' by spectral differentiation of alpha''.
    """
    grid = make_grid(phase.k)
    out = []
    for j, (c, d) in enumerate(phase.intervals()):
        ap = grid.values(phase.alpha_p.coefs[j])
        app = grid.values(phase.alpha_pp.coefs[j])
        appp = grid.derivative(app, c, d)
        wq = phase.omega ** 2 * spec.sample(grid.points(c, d), phase.omega)
        res = ap * ap - wq - 0.75 * (app / ap) ** 2 + 0.5 * appp / ap
        out.append((res / wq)[1:-1])
    return out

