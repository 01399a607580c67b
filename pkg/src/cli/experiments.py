"""
Experiment harness

Each experiment maps one parameter value (a degree n or a frequency
omega) to an ExperimentRow. Build times are measured with a monotonic
clock around build_phase only and averaged over config.runs runs.
Rows can be computed concurrently; they are always returned in input order.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..coefficients import parse
from ..coefficients.catalog import LegendreCoefficient, GegenbauerCoefficient, OscillatoryBVPCoefficient
from ..core.errors import InvalidConfig
from ..core.interfaces import CoefficientSpec
from ..core.logging_config import get_logger
from ..core.models import SolverConfig, ExperimentRow, PiecewisePhase, BoundaryConditions
from ..reference import (EPS0, legendre_alpha_exact, legendre_function, legendre_normal_solutions,
                         gegenbauer, gegenbauer_derivative, spectral_reference_solve)
from ..solver import build_phase, fit_ivp, fit_bvp, eval_solution, kummer_residual

logger = get_logger(__name__)

N_POINTS = 1000


def _powers_of_two(lo: int, hi: int) -> List[float]:
    return [float(2 ** e) for e in range(lo, hi + 1)]


def timed_build(spec: CoefficientSpec, omega: float, a: float, b: float,
                config: SolverConfig) -> Tuple[PiecewisePhase, float]:
    """
    Builds a phase function config.runs times

    Returns:
        Tuple (phase, mean build time in seconds)
    """
    phase = None
    start = time.perf_counter()
    for _ in range(config.runs):
        phase = build_phase(spec, omega, a, b, config)
    elapsed = (time.perf_counter() - start) / config.runs
    return phase, elapsed


def legendre_eval_row(n: float, config: SolverConfig) -> ExperimentRow:
    """L_n = P_n + i (2/pi) Q_n on [0, 0.9] against the recurrences"""
    a, b = 0.0, 0.9
    phase, elapsed = timed_build(LegendreCoefficient(int(n)), 1.0, a, b, config)
    y1, y1p, y2, y2p = legendre_normal_solutions(int(n), a)
    fit_p = fit_ivp(phase, a, y1, y1p)
    fit_q = fit_ivp(phase, a, y2, y2p)

    t = np.linspace(a, b, N_POINTS)
    root = np.sqrt((1.0 - t) * (1.0 + t))
    yp_, _ = eval_solution(phase, fit_p, t)
    yq_, _ = eval_solution(phase, fit_q, t)
    approx = (yp_ + 1j * yq_) / root
    oracle = legendre_function(int(n), t)
    err = np.abs(approx - oracle.values) / np.abs(oracle.values)
    return ExperimentRow(n_or_omega=n, build_time_sec=elapsed, max_err=float(err.max()),
                         cond_pred=oracle.cond_max, n_intervals=phase.n_intervals)


def phase_accuracy_row(n: float, config: SolverConfig) -> ExperimentRow:
    """alpha' of the Legendre normal form on [0, 1 - 1e-7] against the explicit formula"""
    a, b = 0.0, 1.0 - 1.0e-7
    phase, elapsed = timed_build(LegendreCoefficient(int(n)), 1.0, a, b, config)
    t = np.linspace(a, b, N_POINTS)
    exact = legendre_alpha_exact(int(n), t)
    err = np.abs(phase.alpha_p(t) - exact) / np.abs(exact)
    return ExperimentRow(n_or_omega=n, build_time_sec=elapsed, max_err=float(err.max()),
                         cond_pred=legendre_function(int(n), t).cond_max,
                         n_intervals=phase.n_intervals)


def gegenbauer_row(n: float, order: float, config: SolverConfig) -> ExperimentRow:
    """
    C_n^order on [0, 0.999] through the normal form solution
    C_n^order(t) (1-t^2)^((2 order + 1)/4), fitted at t = 0
    """
    a, b = 0.0, 0.999
    n_int = int(n)
    phase, elapsed = timed_build(GegenbauerCoefficient(n_int, order), 1.0, a, b, config)
    coeffs = fit_ivp(phase, a, gegenbauer(n_int, order, a), gegenbauer_derivative(n_int, order, a))

    t = np.linspace(a, b, N_POINTS)
    weight = ((1.0 - t) * (1.0 + t)) ** (0.25 * (2.0 * order + 1.0))
    y, _ = eval_solution(phase, coeffs, t)
    exact = gegenbauer(n_int, order, t)
    err = np.abs(y / weight - exact).max() / np.abs(exact).max()
    return ExperimentRow(n_or_omega=n, build_time_sec=elapsed, max_err=float(err),
                         cond_pred=EPS0 * n, n_intervals=phase.n_intervals, order=order)


def bvp_row(omega: float, config: SolverConfig) -> ExperimentRow:
    """Boundary value problem y(-1) = y(1) = 1 against the adaptive spectral reference"""
    a, b = -1.0, 1.0
    spec = OscillatoryBVPCoefficient()
    phase, elapsed = timed_build(spec, omega, a, b, config)
    coeffs = fit_bvp(phase, 1.0, 1.0)

    start = time.perf_counter()
    reference = spectral_reference_solve(spec, omega, a, b, BoundaryConditions(ya=1.0, yb=1.0),
                                         k=config.k)
    reference_time = time.perf_counter() - start

    t = np.linspace(a, b, N_POINTS)
    y, _ = eval_solution(phase, coeffs, t)
    y_ref, _ = reference.evaluate(t)
    return ExperimentRow(n_or_omega=omega, build_time_sec=elapsed,
                         max_err=float(np.abs(y - y_ref).max()),
                         cond_pred=EPS0 * omega * (b - a), n_intervals=phase.n_intervals,
                         reference_time_sec=reference_time)


def freq_sweep_row(omega: float, config: SolverConfig) -> ExperimentRow:
    """q = 1 + t^2/2 on [0, 1]; the error column is the largest relative Kummer residual"""
    a, b = 0.0, 1.0
    spec = parse("1 + t^2/2")
    phase, elapsed = timed_build(spec, omega, a, b, config)
    residual = max(float(np.abs(r).max()) for r in kummer_residual(phase, spec))
    return ExperimentRow(n_or_omega=omega, build_time_sec=elapsed, max_err=residual,
                         cond_pred=EPS0 * omega * (b - a), n_intervals=phase.n_intervals)


# name -> (row function, default values)
EXPERIMENTS: Dict[str, Tuple[Callable[..., ExperimentRow], List[float]]] = {
    "legendre-eval": (legendre_eval_row, _powers_of_two(6, 14)),
    "phase-accuracy": (phase_accuracy_row, _powers_of_two(7, 14)),
    "gegenbauer": (gegenbauer_row, _powers_of_two(6, 12)),
    "bvp": (bvp_row, _powers_of_two(6, 8)),
    "freq-sweep": (freq_sweep_row, _powers_of_two(8, 14)),
}

GEGENBAUER_ORDERS = (-0.499, 0.25, 1.0)


def get_available_experiments() -> List[str]:
    return list(EXPERIMENTS)


def run_experiment(name: str, config: SolverConfig,
                   values: Optional[Sequence[float]] = None,
                   orders: Optional[Sequence[float]] = None) -> List[ExperimentRow]:
    """
    Runs an experiment over a range of n or omega

    Args:
        name: Experiment name (see EXPERIMENTS)
        config: Solver configuration; runs and workers are used here
        values: Degrees or frequencies (default: the experiment's range)
        orders: Gegenbauer orders (gegenbauer experiment only)

    Returns:
        One row per value (per order and value for gegenbauer), in input order
    """
    if name not in EXPERIMENTS:
        raise InvalidConfig(f"unknown experiment {name!r}; available: {', '.join(EXPERIMENTS)}")
    row_fn, defaults = EXPERIMENTS[name]
    values = list(values) if values else defaults

    if name == "gegenbauer":
        jobs = [(v, order) for order in (orders or GEGENBAUER_ORDERS) for v in values]
    else:
        jobs = [(v,) for v in values]

    def run(job) -> ExperimentRow:
        row = row_fn(*job, config)
        logger.info(f"{name}: {job} -> max_err={row.max_err:.3e}, "
                    f"{row.n_intervals} intervals, {row.build_time_sec:.3e} s")
        return row

    if config.workers == 1:
        return [run(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(run, jobs))


def rows_to_table(rows: List[ExperimentRow]) -> Tuple[List[str], List[List[float]]]:
    """
    Column names and values for CSV output

    The optional order and reference_time_sec columns appear only when
    some row sets them.
    """
    columns = ["n_or_omega", "build_time_sec", "max_err", "cond_pred", "n_intervals"]
    if any(r.order is not None for r in rows):
        columns.insert(1, "order")
    if any(r.reference_time_sec is not None for r in rows):
        columns.append("reference_time_sec")
    table = [[np.nan if getattr(r, c) is None else getattr(r, c) for c in columns] for r in rows]
    return columns, table
