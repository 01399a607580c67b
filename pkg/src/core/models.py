"""
Data models used in the system
"""
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from typing import Optional, Dict, Any, List, Tuple

import numpy as np

from .chebyshev import PiecewiseChebyshev, ChebExpansion
from .errors import InvalidConfig, OutOfDomain, DegeneratePhase


@dataclass(frozen=True)
class SolverConfig:
    """Parameters controlling the precision and cost of a solve"""
    k: int = 16
    eps: float = 1.0e-12
    thresh: float = 10.0
    max_newton: int = 20
    max_depth: int = 60
    runs: int = 100
    workers: int = 1
    out_phase: Optional[str] = None
    out_csv: Optional[str] = None

    def __post_init__(self):
        if self.k < 4:
            raise InvalidConfig(f"k must be at least 4, got {self.k}")
        if not 0.0 < self.eps < 1.0:
            raise InvalidConfig(f"eps must lie in (0, 1), got {self.eps}")
        if not self.thresh > 0.0:
            raise InvalidConfig(f"thresh must be positive, got {self.thresh}")
        if self.max_newton < 1:
            raise InvalidConfig(f"max_newton must be positive, got {self.max_newton}")
        if self.max_depth < 1:
            raise InvalidConfig(f"max_depth must be positive, got {self.max_depth}")
        if self.runs < 1:
            raise InvalidConfig(f"runs must be positive, got {self.runs}")
        if self.workers < 1:
            raise InvalidConfig(f"workers must be positive, got {self.workers}")

    def configure(self, options: Dict[str, Any]) -> "SolverConfig":
        """
        Returns a copy with the given options applied

        Args:
            options: Mapping of field name to new value; None values are ignored
        """
        known = {f.name for f in fields(self)}
        unknown = set(options) - known
        if unknown:
            raise InvalidConfig(f"unknown config option(s): {', '.join(sorted(unknown))}")
        changes = {key: value for key, value in options.items() if value is not None}
        return replace(self, **changes)

    def get_parameters(self) -> Dict[str, Any]:
        """Returns tunable parameters for display"""
        return {
            "k": {"type": "int", "value": self.k, "label": "Chebyshev nodes per interval"},
            "eps": {"type": "float", "value": self.eps, "label": "Requested precision"},
            "thresh": {"type": "float", "value": self.thresh, "label": "High-frequency threshold"},
            "max_newton": {"type": "int", "value": self.max_newton, "label": "Newton iteration cap"},
            "max_depth": {"type": "int", "value": self.max_depth, "label": "Bisection depth cap"},
            "runs": {"type": "int", "value": self.runs, "label": "Timing runs"},
            "workers": {"type": "int", "value": self.workers, "label": "Experiment workers"},
        }


class Provenance(Enum):
    """How the phase derivative on an interval was obtained"""
    RICCATI = "riccati"
    APPELL_IVP = "appell-ivp"
    APPELL_TVP = "appell-tvp"


@dataclass
class ChebInterval:
    """One discretization interval and the samples stored on it"""
    a: float
    b: float
    depth: int
    q: np.ndarray
    ap: Optional[np.ndarray] = None
    app: Optional[np.ndarray] = None
    provenance: Optional[Provenance] = None

    @property
    def solved(self) -> bool:
        return self.ap is not None


@dataclass
class RiccatiResult:
    """Converged Riccati samples on one interval"""
    r: np.ndarray
    iterations: int
    final_update_norm: float
    update_norms: List[float] = field(default_factory=list)


class Side(Enum):
    """Endpoint at which Appell data is given"""
    LEFT_ENTRY = "left-entry"
    RIGHT_ENTRY = "right-entry"


@dataclass(frozen=True)
class AppellIVPData:
    """Values of m, m' and m'' at the entry endpoint"""
    m0: float
    mp0: float
    mpp0: float
    side: Side = Side.LEFT_ENTRY

    def __post_init__(self):
        if not self.m0 > 0.0:
            raise DegeneratePhase(f"modulus must be positive, got m0={self.m0}")


class PhaseQuantity(Enum):
    """Quantities stored by a PiecewisePhase"""
    ALPHA = "alpha"
    ALPHA_P = "alpha_p"
    ALPHA_PP = "alpha_pp"


@dataclass(frozen=True, eq=False)
class PiecewisePhase:
    """
    Trigonometric phase function alpha with alpha' and alpha''

    Each quantity is a piecewise Chebyshev expansion over the same
    contiguous intervals; alpha(a) = 0.
    """
    omega: float
    k: int
    alpha: PiecewiseChebyshev
    alpha_p: PiecewiseChebyshev
    alpha_pp: PiecewiseChebyshev
    provenance: Tuple[Optional[Provenance], ...]

    @property
    def a(self) -> float:
        return self.alpha.a

    @property
    def b(self) -> float:
        return self.alpha.b

    @property
    def breakpoints(self) -> np.ndarray:
        return self.alpha.breakpoints

    @property
    def n_intervals(self) -> int:
        return self.alpha.n_intervals

    def intervals(self) -> List[Tuple[float, float]]:
        bp = self.breakpoints
        return [(float(bp[j]), float(bp[j + 1])) for j in range(self.n_intervals)]

    def quantity(self, which) -> PiecewiseChebyshev:
        """Returns the piecewise expansion for alpha, alpha_p or alpha_pp"""
        try:
            which = PhaseQuantity(which)
        except ValueError:
            raise OutOfDomain(f"unknown phase quantity {which!r}")
        return {
            PhaseQuantity.ALPHA: self.alpha,
            PhaseQuantity.ALPHA_P: self.alpha_p,
            PhaseQuantity.ALPHA_PP: self.alpha_pp,
        }[which]

    def expansion(self, j: int, which="alpha") -> ChebExpansion:
        return self.quantity(which).interval(j)


@dataclass(frozen=True)
class SolutionCoeffs:
    """Solution c1 sin(alpha)/sqrt(alpha') + c2 cos(alpha)/sqrt(alpha')"""
    c1: float
    c2: float


@dataclass
class OracleResult:
    """Reference values with their condition estimates"""
    values: np.ndarray
    derivatives: np.ndarray
    cond: np.ndarray

    @property
    def cond_max(self) -> float:
        return float(np.max(self.cond))


@dataclass
class ExperimentRow:
    """One row of an experiment table"""
    n_or_omega: float
    build_time_sec: float
    max_err: float
    cond_pred: float
    n_intervals: int
    order: Optional[float] = None
    reference_time_sec: Optional[float] = None


@dataclass(frozen=True)
class InitialConditions:
    """y(t0) = y0, y'(t0) = yp0"""
    t0: float
    y0: float
    yp0: float


@dataclass(frozen=True)
class BoundaryConditions:
    """y(a) = ya, y(b) = yb"""
    ya: float
    yb: float
