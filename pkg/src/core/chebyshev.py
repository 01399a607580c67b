"""
Chebyshev extremal-grid machinery

Nodes, spectral differentiation / integration matrices, the
values-to-coefficients transform, Clenshaw evaluation and the
goodness-of-fit test. All matrices live on [-1, 1] and are rescaled
per interval by 2/(b-a) (differentiation) or (b-a)/2 (integration).
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np
from numpy.polynomial import chebyshev as cheb

from .errors import InvalidConfig, NumericFailure, OutOfDomain

ArrayLike = Union[float, np.ndarray]

EPS0 = float(np.finfo(float).eps)


def chebyshev_nodes(k: int) -> np.ndarray:
    """
    Ascending k-point extremal grid, nodes[i] = cos(pi (k-i)/(k-1)), i = 1..k

    The sine form keeps the grid exactly symmetric (and 0 exact for odd k).
    """
    if k < 2:
        raise InvalidConfig(f"grid needs at least 2 nodes, got k={k}")
    i = np.arange(1, k + 1)
    return np.sin(np.pi * (2 * i - k - 1) / (2 * (k - 1)))


def _diff_matrix(nodes: np.ndarray) -> np.ndarray:
    k = len(nodes)
    c = np.ones(k)
    c[0] = c[-1] = 2.0
    c *= (-1.0) ** np.arange(k)
    dx = nodes[:, None] - nodes[None, :]
    d = np.outer(c, 1.0 / c) / (dx + np.eye(k))
    # negative-sum trick: rows annihilate constants
    d -= np.diag(d.sum(axis=1))
    return d


def _vals2coefs_matrix(k: int) -> np.ndarray:
    theta = np.pi * (k - 1 - np.arange(k)) / (k - 1)
    n = np.arange(k)
    weights = np.ones(k)
    weights[0] = weights[-1] = 0.5
    mat = (2.0 / (k - 1)) * np.cos(np.outer(n, theta)) * weights[None, :]
    mat[0, :] *= 0.5
    mat[-1, :] *= 0.5
    return mat


def _integ_matrix(nodes: np.ndarray, vals2coefs: np.ndarray) -> np.ndarray:
    k = len(nodes)
    # antiderivative coefficients vanishing at -1, degree up to k
    anti = cheb.chebint(vals2coefs, m=1, lbnd=-1.0, axis=0)
    return cheb.chebvander(nodes, k) @ anti


@dataclass(frozen=True, eq=False)
class ChebGrid:
    """k-point extremal grid and its spectral matrices (read-only)"""
    k: int
    nodes: np.ndarray
    diff: np.ndarray
    integ: np.ndarray
    vals2coefs: np.ndarray

    def points(self, a: float, b: float) -> np.ndarray:
        """Nodes mapped to [a, b]; the end nodes are exactly a and b"""
        pts = a + 0.5 * (b - a) * (self.nodes + 1.0)
        pts[0] = a
        pts[-1] = b
        return pts

    def derivative(self, vals: np.ndarray, a: float, b: float) -> np.ndarray:
        """Spectral derivative of samples on [a, b]"""
        return (2.0 / (b - a)) * (self.diff @ vals)

    def antiderivative(self, vals: np.ndarray, a: float, b: float) -> np.ndarray:
        """Spectral antiderivative of samples on [a, b], zero at a"""
        return 0.5 * (b - a) * (self.integ @ vals)

    def integration_operator(self, a: float, b: float, from_right: bool = False) -> np.ndarray:
        """
        Matrix of the antiderivative on [a, b] anchored at a, or at b
        when from_right is set
        """
        op = 0.5 * (b - a) * self.integ
        if from_right:
            op = op - np.outer(np.ones(self.k), op[-1, :])
        return op

    def values(self, coefs: np.ndarray) -> np.ndarray:
        """Samples at the nodes of the expansion with the given coefficients"""
        return cheb.chebval(self.nodes, coefs)


@lru_cache(maxsize=None)
def make_grid(k: int) -> ChebGrid:
    """
    Builds (and caches) the grid for a given k

    Args:
        k: Number of nodes, at least 4

    Returns:
        Shared read-only ChebGrid
    """
    if k < 4:
        raise InvalidConfig(f"k must be at least 4, got {k}")
    nodes = chebyshev_nodes(k)
    vals2coefs = _vals2coefs_matrix(k)
    diff = _diff_matrix(nodes)
    integ = _integ_matrix(nodes, vals2coefs)
    for arr in (nodes, diff, integ, vals2coefs):
        arr.setflags(write=False)
    return ChebGrid(k=k, nodes=nodes, diff=diff, integ=integ, vals2coefs=vals2coefs)


@dataclass(frozen=True, eq=False)
class ChebExpansion:
    """Chebyshev expansion sum a_j T_j(x) on [a, b]"""
    a: float
    b: float
    coefs: np.ndarray

    def __call__(self, t: ArrayLike):
        return eval_expansion(self, t)


def vals_to_coefs(grid: ChebGrid, vals: np.ndarray, a: float, b: float) -> ChebExpansion:
    """
    Converts samples at the mapped nodes to a Chebyshev expansion

    Args:
        grid: Chebyshev grid
        vals: k real or complex samples
        a, b: Interval endpoints

    Returns:
        ChebExpansion interpolating vals
    """
    if not b > a:
        raise InvalidConfig(f"empty interval [{a}, {b}]")
    vals = np.asarray(vals)
    if vals.shape != (grid.k,):
        raise InvalidConfig(f"expected {grid.k} samples, got shape {vals.shape}")
    if not np.all(np.isfinite(vals)):
        raise NumericFailure("non-finite sample passed to vals_to_coefs")
    return ChebExpansion(a=float(a), b=float(b), coefs=grid.vals2coefs @ vals)


def _to_reference(t: np.ndarray, a: float, b: float) -> np.ndarray:
    x = (2.0 * t - a - b) / (b - a)
    return np.clip(x, -1.0, 1.0)


def eval_expansion(e: ChebExpansion, t: ArrayLike):
    """Clenshaw evaluation of an expansion at t in [a, b]"""
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)) or np.any(t_arr < e.a) or np.any(t_arr > e.b):
        raise OutOfDomain(f"t outside [{e.a}, {e.b}]")
    vals = cheb.chebval(_to_reference(t_arr, e.a, e.b), e.coefs)
    return vals[()] if np.ndim(vals) == 0 else vals


def fit_ratio(grid: ChebGrid, vals: np.ndarray) -> float:
    """
    Goodness-of-fit ratio max(|a_{k-2}|, |a_{k-1}|) / max_j |a_j|

    A function is well fit at eps when the ratio is below eps.
    All-zero samples give 0.
    """
    coefs = np.abs(grid.vals2coefs @ np.asarray(vals))
    largest = coefs.max()
    if largest == 0.0:
        return 0.0
    return float(max(coefs[-2], coefs[-1]) / largest)


def sampling_floor(grid: ChebGrid, vals: np.ndarray, dvals: np.ndarray, a: float, b: float) -> float:
    """
    Smallest fit ratio samples of f can reach on [a, b]

    Mapped nodes are rounded to within EPS0 |t|, which perturbs each
    sample by about EPS0 |t f'(t) / f(t)| relative. Near a singular
    endpoint this exceeds any requested precision and the trailing
    coefficients stop decaying however short the interval.
    """
    t = grid.points(a, b)
    vals = np.asarray(vals)
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.abs(t * np.asarray(dvals) / vals)
    rel = rel[np.isfinite(rel)]
    return EPS0 * float(rel.max()) if rel.size else 0.0


@dataclass(frozen=True, eq=False)
class PiecewiseChebyshev:
    """
    Piecewise expansion over contiguous intervals

    breakpoints has m+1 ascending entries, coefs has shape (m, k).
    A shared endpoint belongs to the interval on its left.
    """
    breakpoints: np.ndarray
    coefs: np.ndarray

    @property
    def a(self) -> float:
        return float(self.breakpoints[0])

    @property
    def b(self) -> float:
        return float(self.breakpoints[-1])

    @property
    def n_intervals(self) -> int:
        return len(self.breakpoints) - 1

    def locate(self, t: np.ndarray) -> np.ndarray:
        """Index of the interval containing each t (binary search)"""
        idx = np.searchsorted(self.breakpoints, t, side="left") - 1
        return np.clip(idx, 0, self.n_intervals - 1)

    def interval(self, j: int) -> ChebExpansion:
        return ChebExpansion(
            a=float(self.breakpoints[j]),
            b=float(self.breakpoints[j + 1]),
            coefs=self.coefs[j],
        )

    def __call__(self, t: ArrayLike):
        t_arr = np.asarray(t, dtype=float)
        if not np.all(np.isfinite(t_arr)) or np.any(t_arr < self.a) or np.any(t_arr > self.b):
            raise OutOfDomain(f"t outside [{self.a}, {self.b}]")
        flat = np.atleast_1d(t_arr).ravel()
        idx = self.locate(flat)
        out = np.empty(flat.shape, dtype=self.coefs.dtype)
        for j in np.unique(idx):
            mask = idx == j
            lo, hi = self.breakpoints[j], self.breakpoints[j + 1]
            out[mask] = cheb.chebval(_to_reference(flat[mask], lo, hi), self.coefs[j])
        if t_arr.ndim == 0:
            return out[0]
        return out.reshape(t_arr.shape)
