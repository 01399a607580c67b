"""
Base interface for coefficient sources
"""
from abc import ABC, abstractmethod
from typing import Dict, Any, Tuple

import numpy as np

from .errors import NumericFailure


class CoefficientSpec(ABC):
    """
    Generic interface for the coefficient q(t, omega) of y'' + omega^2 q y = 0

    Implementations are immutable; evaluate() must be deterministic and
    accept numpy arrays of t.
    """

    kind: str = ""

    @abstractmethod
    def evaluate(self, t: np.ndarray, omega: float) -> np.ndarray:
        """Evaluates q at the points t (no omega^2 factor)"""
        pass

    @abstractmethod
    def get_name(self) -> str:
        """Returns a short description of the coefficient"""
        pass

    @abstractmethod
    def get_parameters(self) -> Dict[str, Any]:
        """Returns the parameters the coefficient was built with"""
        pass

    def domain(self) -> Tuple[float, float]:
        """Largest interval on which q is defined"""
        return -np.inf, np.inf

    def sample(self, t: np.ndarray, omega: float) -> np.ndarray:
        """Evaluates q at t and rejects non-finite values"""
        t = np.asarray(t, dtype=float)
        with np.errstate(all="ignore"):
            vals = np.asarray(self.evaluate(t, omega), dtype=float)
        vals = np.broadcast_to(vals, t.shape).copy()
        if not np.all(np.isfinite(vals)):
            bad = t[~np.isfinite(vals)] if t.ndim else t
            raise NumericFailure(f"{self.get_name()} is not finite at t={np.ravel(bad)[:3]}")
        return vals
