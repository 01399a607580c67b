"""
Reading and writing phase functions in the OSCPHASE 1 text format

    OSCPHASE 1
    <k> <m> <omega>
    then for each of the m intervals:
    <a_j> <b_j>
    <k coefficients of alpha>
    <k coefficients of alpha'>
    <k coefficients of alpha''>

Numbers are printed with 17 significant digits.
"""
from pathlib import Path
from typing import List, Union

import numpy as np

from ..core.chebyshev import PiecewiseChebyshev
from ..core.errors import FormatError
from ..core.logging_config import get_logger
from ..core.models import PiecewisePhase

logger = get_logger(__name__)

HEADER = "OSCPHASE"
VERSION = 1


def _fmt(x: float) -> str:
    return "%.17g" % x


def write_phase(path: Union[str, Path], phase: PiecewisePhase) -> str:
    """
    Saves a phase function

    Args:
        path: Output file (parent folders are created)
        phase: Phase function to save

    Returns:
        Path of the written file
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{HEADER} {VERSION}", f"{phase.k} {phase.n_intervals} {_fmt(phase.omega)}"]
    for j, (a, b) in enumerate(phase.intervals()):
        lines.append(f"{_fmt(a)} {_fmt(b)}")
        for which in (phase.alpha, phase.alpha_p, phase.alpha_pp):
            lines.append(" ".join(_fmt(c) for c in which.coefs[j]))
    path.write_text("\n".join(lines) + "\n")
    logger.info(f"wrote phase with {phase.n_intervals} intervals to {path}")
    return str(path)


class _Lines:
    """Line cursor tracking 1-based line numbers for error messages"""

    def __init__(self, text: str):
        self._lines = text.splitlines()
        self.lineno = 0

    def next(self) -> List[str]:
        if self.lineno >= len(self._lines):
            raise FormatError("unexpected end of file", line=self.lineno + 1)
        self.lineno += 1
        return self._lines[self.lineno - 1].split()

    def floats(self, count: int) -> np.ndarray:
        fields = self.next()
        if len(fields) != count:
            raise FormatError(f"expected {count} numbers, got {len(fields)}", line=self.lineno)
        try:
            values = np.array([float(f) for f in fields])
        except ValueError as e:
            raise FormatError(f"bad number: {e}", line=self.lineno)
        if not np.all(np.isfinite(values)):
            raise FormatError("non-finite number", line=self.lineno)
        return values

    def finish(self):
        """Rejects non-blank lines after the last interval"""
        for offset, line in enumerate(self._lines[self.lineno:], start=self.lineno + 1):
            if line.strip():
                raise FormatError("unexpected content after the last interval", line=offset)


def read_phase(path: Union[str, Path]) -> PiecewisePhase:
    """
    Loads a phase function saved by write_phase

    Loaded phases carry no provenance.

    Raises:
        FormatError: on a malformed file, with the offending line number
    """
    cursor = _Lines(Path(path).read_text())

    header = cursor.next()
    if len(header) != 2 or header[0] != HEADER:
        raise FormatError("missing OSCPHASE header", line=cursor.lineno)
    if header[1] != str(VERSION):
        raise FormatError(f"unknown version {header[1]}", line=cursor.lineno)

    sizes = cursor.next()
    if len(sizes) != 3:
        raise FormatError("expected '<k> <m> <omega>'", line=cursor.lineno)
    try:
        k, m, omega = int(sizes[0]), int(sizes[1]), float(sizes[2])
    except ValueError as e:
        raise FormatError(f"bad size line: {e}", line=cursor.lineno)
    if k < 4:
        raise FormatError(f"k must be at least 4, got {k}", line=cursor.lineno)
    if m < 1:
        raise FormatError(f"need at least one interval, got {m}", line=cursor.lineno)
    if not omega > 0.0:
        raise FormatError(f"omega must be positive, got {omega}", line=cursor.lineno)

    breakpoints = np.empty(m + 1)
    coefs = np.empty((3, m, k))
    for j in range(m):
        a, b = cursor.floats(2)
        if not b > a:
            raise FormatError(f"interval [{a}, {b}] is not increasing", line=cursor.lineno)
        if j > 0 and a != breakpoints[j]:
            raise FormatError(f"interval starts at {a}, previous ends at {breakpoints[j]}",
                              line=cursor.lineno)
        breakpoints[j], breakpoints[j + 1] = a, b
        for i in range(3):
            coefs[i, j] = cursor.floats(k)
    cursor.finish()

    return PiecewisePhase(
        omega=omega,
        k=k,
        alpha=PiecewiseChebyshev(breakpoints, coefs[0]),
        alpha_p=PiecewiseChebyshev(breakpoints, coefs[1]),
        alpha_pp=PiecewiseChebyshev(breakpoints, coefs[2]),
        provenance=(None,) * m,
    )
