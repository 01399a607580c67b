"""
Three-term recurrences for Legendre and Gegenbauer functions

These are the oracles the phase method is checked against. Forward
recurrence is used for P_n and Q_n on (-1, 1) and for C_n^a on [-1, 1].
"""
from typing import Tuple, Union

import numpy as np
from scipy.special import binom

from ..core.chebyshev import EPS0
from ..core.errors import InvalidConfig, OutOfDomain
from ..core.models import OracleResult

ArrayLike = Union[float, np.ndarray]


def _degree(n) -> int:
    if int(n) != n or n < 0:
        raise InvalidConfig(f"degree must be a nonnegative integer, got {n}")
    return int(n)


def _scalar(x: np.ndarray):
    return x[()] if np.ndim(x) == 0 else x


def _open_interval(t: ArrayLike) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if not np.all(np.abs(t) < 1.0):
        raise OutOfDomain("Legendre functions need |t| < 1")
    return t


def legendre_pq(n: int, t: ArrayLike) -> Tuple:
    """
    Legendre functions of the first and second kind with derivatives

    Args:
        n: Degree
        t: Points in (-1, 1)

    Returns:
        Tuple (P_n, Q_n, P_n', Q_n')
    """
    n = _degree(n)
    t = _open_interval(t)
    w = (1.0 - t) * (1.0 + t)
    p_prev, p = np.ones_like(t), t.copy()
    q_prev = np.arctanh(t)
    q = t * q_prev - 1.0
    if n == 0:
        return (_scalar(p_prev), _scalar(q_prev),
                _scalar(np.zeros_like(t)), _scalar(1.0 / w))
    for j in range(1, n):
        p_prev, p = p, ((2 * j + 1) * t * p - j * p_prev) / (j + 1)
        q_prev, q = q, ((2 * j + 1) * t * q - j * q_prev) / (j + 1)
    pp = n * (p_prev - t * p) / w
    qp = n * (q_prev - t * q) / w
    return _scalar(p), _scalar(q), _scalar(pp), _scalar(qp)


def legendre_alpha_exact(n: int, t: ArrayLike):
    """
    Derivative of the nonoscillatory phase function of the Legendre
    normal form, 1/((1-t^2)((pi/2) P_n^2 + (2/pi) Q_n^2))
    """
    p, q, _, _ = legendre_pq(n, t)
    t = np.asarray(t, dtype=float)
    w = (1.0 - t) * (1.0 + t)
    return 1.0 / (w * (0.5 * np.pi * p * p + (2.0 / np.pi) * q * q))


def legendre_function(n: int, t: ArrayLike) -> OracleResult:
    """
    L_n = P_n + i (2/pi) Q_n with its derivative and condition numbers

    The condition number of evaluating L_n at t is EPS0 |t L_n'(t) / L_n(t)|.
    """
    p, q, pp, qp = legendre_pq(n, t)
    t = np.asarray(t, dtype=float)
    values = p + 1j * (2.0 / np.pi) * q
    derivatives = pp + 1j * (2.0 / np.pi) * qp
    cond = EPS0 * np.abs(t * derivatives / values)
    return OracleResult(values=np.atleast_1d(values), derivatives=np.atleast_1d(derivatives),
                        cond=np.atleast_1d(cond))


def legendre_normal_solutions(n: int, t: ArrayLike) -> Tuple:
    """
    The pair P_n sqrt(1-t^2), (2/pi) Q_n sqrt(1-t^2) solving the Legendre
    normal form, with derivatives

    Returns:
        Tuple (y1, y1', y2, y2')
    """
    p, q, pp, qp = legendre_pq(n, t)
    t = np.asarray(t, dtype=float)
    w = (1.0 - t) * (1.0 + t)
    root = np.sqrt(w)
    scale = 2.0 / np.pi
    y1 = p * root
    y1p = pp * root - t * p / root
    y2 = scale * q * root
    y2p = scale * (qp * root - t * q / root)
    return y1, y1p, y2, y2p


def _check_order(order: float):
    if not order > -0.5 or order == 0.0:
        raise InvalidConfig(f"Gegenbauer order must satisfy alpha > -1/2, alpha != 0; got {order}")


def gegenbauer(n: int, order: float, t: ArrayLike):
    """Gegenbauer polynomial C_n^order(t) by forward recurrence"""
    n = _degree(n)
    _check_order(order)
    t = np.asarray(t, dtype=float)
    if not np.all(np.abs(t) <= 1.0):
        raise OutOfDomain("Gegenbauer polynomials are evaluated on [-1, 1]")
    c_prev = np.ones_like(t)
    if n == 0:
        return _scalar(c_prev)
    c = 2.0 * order * t
    for j in range(2, n + 1):
        c_prev, c = c, (2.0 * (j + order - 1.0) * t * c - (j + 2.0 * order - 2.0) * c_prev) / j
    return _scalar(c)


def gegenbauer_derivative(n: int, order: float, t: ArrayLike):
    """d/dt C_n^a = 2a C_{n-1}^{a+1}"""
    n = _degree(n)
    _check_order(order)
    if n == 0:
        return _scalar(np.zeros_like(np.asarray(t, dtype=float)))
    return 2.0 * order * gegenbauer(n - 1, order + 1.0, t)


def gegenbauer_at_one(n: int, order: float) -> float:
    """C_n^a(1) = Gamma(2a+n) / (Gamma(2a) Gamma(n+1))"""
    n = _degree(n)
    _check_order(order)
    return float(binom(n + 2.0 * order - 1.0, n))
