"""Coefficient sources: parsed expressions, catalog entries, callbacks"""
from typing import Optional, Dict, Union

import numpy as np

from ..core.interfaces import CoefficientSpec
from .callback import CallbackCoefficient
from .catalog import CATALOG, from_catalog, get_available_entries
from .expression import ExpressionCoefficient, to_source


def parse(expr_source: str, params: Optional[Dict[str, float]] = None) -> ExpressionCoefficient:
    """Parses an expression into a coefficient"""
    return ExpressionCoefficient(expr_source, params)


def eval_q(spec: CoefficientSpec, t: Union[float, np.ndarray], omega: float):
    """Value of q(t, omega); raises NumericFailure at poles"""
    vals = spec.sample(t, omega)
    return float(vals) if vals.ndim == 0 else vals


__all__ = [
    "CATALOG",
    "CallbackCoefficient",
    "CoefficientSpec",
    "ExpressionCoefficient",
    "eval_q",
    "from_catalog",
    "get_available_entries",
    "parse",
    "to_source",
]
