"""
Exceptions raised by the solver

Every error carries a stable name used by the command line as a
machine-readable diagnostic.
"""
from typing import Optional


class SolverError(Exception):
    """Base class for all solver errors"""

    @property
    def name(self) -> str:
        """Diagnostic name reported on the command line"""
        return type(self).__name__


class InvalidConfig(SolverError):
    """Configuration value out of range"""


class NumericFailure(SolverError):
    """Non-finite input or intermediate value"""


class OutOfDomain(SolverError):
    """Evaluation point outside the domain of a representation"""


class ParseError(SolverError):
    """Malformed coefficient expression"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class QNotPositive(SolverError):
    """Coefficient is not strictly positive at a collocation node"""


class SingularLinearization(SolverError):
    """Zero entry in the Riccati iterate"""


class NewtonDivergence(SolverError):
    """Newton-Kantorovich iteration failed to converge"""


class SingularSystem(SolverError):
    """Singular Appell integral-equation matrix"""


class DegeneratePhase(SolverError):
    """Non-positive phase derivative or modulus"""


class NonConvergentRefinement(SolverError):
    """Adaptive bisection exceeded the maximum depth"""


class NoHighFrequencyInterval(SolverError):
    """No interval is in the high-frequency regime"""


class IllConditionedBC(SolverError):
    """Boundary conditions are (nearly) incompatible with the basis"""


class FormatError(SolverError):
    """Malformed serialized phase function"""

    def __init__(self, message: str, line: Optional[int] = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
