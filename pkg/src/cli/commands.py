"""
Command implementations behind main.py

Commands take the parsed argparse namespace, do their work and return
an exit status. Solver errors are left to the caller, which reports
them by name.
"""
import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from ..coefficients import parse, from_catalog
from ..core.errors import InvalidConfig
from ..core.interfaces import CoefficientSpec
from ..core.logging_config import get_logger
from ..core.models import SolverConfig, SolutionCoeffs
from ..solver import build_phase, eval_phase, fit_ivp, fit_bvp, eval_solution
from .experiments import run_experiment, rows_to_table
from .phase_io import write_phase

logger = get_logger(__name__)

CSV_FORMAT = "%.17g"


def parse_params(items: Optional[List[str]]) -> Dict[str, float]:
    """Turns ["n=1024", "alpha=0.25"] into {"n": 1024.0, "alpha": 0.25}"""
    params: Dict[str, float] = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise InvalidConfig(f"--param expects name=value, got {item!r}")
        try:
            params[name.strip()] = float(value)
        except ValueError:
            raise InvalidConfig(f"--param {name.strip()} needs a number, got {value!r}")
    return params


def config_from_args(args: argparse.Namespace) -> SolverConfig:
    """Applies the command line overrides to the default configuration"""
    options = {name: getattr(args, name, None)
               for name in ("k", "eps", "thresh", "max_newton", "max_depth", "runs", "workers",
                            "out_phase", "out_csv")}
    return SolverConfig().configure(options)


def coefficient_from_args(args: argparse.Namespace) -> CoefficientSpec:
    params = parse_params(args.param)
    if args.q is not None:
        return parse(args.q, params)
    return from_catalog(args.catalog, **params)


def evaluation_points(args: argparse.Namespace) -> np.ndarray:
    """Points from --eval-file (one per line) or --eval-points equispaced on [a, b]"""
    if args.eval_file:
        try:
            points = np.atleast_1d(np.loadtxt(args.eval_file, dtype=float))
        except (OSError, ValueError) as e:
            raise InvalidConfig(f"cannot read --eval-file {args.eval_file}: {e}")
        if points.ndim != 1:
            raise InvalidConfig(f"--eval-file must hold one point per line, got shape {points.shape}")
        return points
    if args.eval_points < 1:
        raise InvalidConfig(f"--eval-points must be positive, got {args.eval_points}")
    return np.linspace(args.a, args.b, args.eval_points)


def write_csv(path: Optional[str], columns: List[str], table) -> None:
    """Writes a comma-separated table with a header row to path, or stdout"""
    data = np.atleast_2d(np.asarray(table, dtype=float))
    target = sys.stdout
    if path:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        target = path
    np.savetxt(target, data, fmt=CSV_FORMAT, delimiter=",", header=",".join(columns), comments="")


def show_config(config: SolverConfig):
    """Prints the effective configuration to stderr"""
    for name, param in config.get_parameters().items():
        print(f"{name:<12} {param['value']!s:<12} {param['label']}", file=sys.stderr)


def cmd_solve(args: argparse.Namespace) -> int:
    """
    Builds a phase function, fits the requested solution and writes
    t, y, yp, alpha, alphap as CSV

    Without --ivp or --bvp the solution is sin(alpha)/sqrt(alpha').
    """
    config = config_from_args(args)
    if args.show_config:
        show_config(config)
    spec = coefficient_from_args(args)
    phase = build_phase(spec, args.omega, args.a, args.b, config)

    if args.ivp is not None:
        t0, y0, yp0 = args.ivp
        coeffs = fit_ivp(phase, t0, y0, yp0)
    elif args.bvp is not None:
        coeffs = fit_bvp(phase, *args.bvp)
    else:
        coeffs = SolutionCoeffs(c1=1.0, c2=0.0)

    t = evaluation_points(args)
    y, yp = eval_solution(phase, coeffs, t)
    table = np.column_stack([t, y, yp, eval_phase(phase, t, "alpha"), eval_phase(phase, t, "alpha_p")])
    write_csv(config.out_csv, ["t", "y", "yp", "alpha", "alphap"], table)

    if config.out_phase:
        write_phase(config.out_phase, phase)
    logger.info(f"solved {spec.get_name()} at omega={args.omega} with {phase.n_intervals} intervals")
    return 0


def cmd_experiment(args: argparse.Namespace) -> int:
    """Runs an experiment and writes its table as CSV"""
    config = config_from_args(args)
    if args.show_config:
        show_config(config)
    rows = run_experiment(args.name, config, values=args.values, orders=args.orders)
    columns, table = rows_to_table(rows)
    write_csv(config.out_csv, columns, table)
    return 0
