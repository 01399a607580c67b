"""Reference oracles: classical recurrences and a direct spectral solver"""
from .recurrences import (EPS0, legendre_pq, legendre_alpha_exact, legendre_function,
                          legendre_normal_solutions, gegenbauer, gegenbauer_derivative,
                          gegenbauer_at_one)
from .spectral_solver import ReferenceSolution, spectral_reference_solve

__all__ = [
    "EPS0",
    "ReferenceSolution",
    "gegenbauer",
    "gegenbauer_at_one",
    "gegenbauer_derivative",
    "legendre_alpha_exact",
    "legendre_function",
    "legendre_normal_solutions",
    "legendre_pq",
    "spectral_reference_solve",
]
