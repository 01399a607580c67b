"""
Coefficient supplied as a Python callable
"""
from typing import Callable, Dict, Any, Tuple

import numpy as np

from ..core.interfaces import CoefficientSpec


class CallbackCoefficient(CoefficientSpec):
    """Wraps a function q(t, omega)"""

    kind = "callback"

    def __init__(self,
                 func: Callable[[np.ndarray, float], np.ndarray],
                 name: str = "callback",
                 vectorized: bool = True,
                 domain: Tuple[float, float] = (-np.inf, np.inf)):
        """
        Args:
            func: Callable returning q at t for a given omega
            name: Label used in diagnostics
            vectorized: Whether func accepts arrays of t
            domain: Interval on which func is defined
        """
        self.func = func
        self.name = name
        self.vectorized = vectorized
        self._domain = domain

    def evaluate(self, t: np.ndarray, omega: float) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if self.vectorized:
            return self.func(t, omega)
        return np.array([self.func(float(s), omega) for s in t.ravel()]).reshape(t.shape)

    def domain(self) -> Tuple[float, float]:
        return self._domain

    def get_name(self) -> str:
        return self.name

    def get_parameters(self) -> Dict[str, Any]:
        return {"vectorized": self.vectorized}
