"""Phase-function construction and the solution API"""
from .phase_function import build_phase, eval_phase, kummer_residual
from .solutions import basis_at, fit_ivp, fit_bvp, eval_solution, wronskian

__all__ = [
    "basis_at",
    "build_phase",
    "eval_phase",
    "eval_solution",
    "fit_bvp",
    "fit_ivp",
    "kummer_residual",
    "wronskian",
]
