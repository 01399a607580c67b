"""
Built-in catalog of coefficients

Legendre and Gegenbauer entries are normal forms with the frequency
folded into q (use omega = 1 with large n). The oscillatory boundary
value coefficient keeps omega separate: the solver multiplies by
omega^2 as usual.
"""
from typing import Dict, Any, Tuple, Type

import numpy as np

from ..core.errors import InvalidConfig
from ..core.interfaces import CoefficientSpec


def _one_minus_t2(t: np.ndarray) -> np.ndarray:
    # (1-t)(1+t) keeps full relative accuracy near t = +-1
    return (1.0 - t) * (1.0 + t)


class CatalogCoefficient(CoefficientSpec):
    """Base class for catalog entries"""

    kind = "catalog"
    catalog_id = ""

    def get_name(self) -> str:
        params = ", ".join(f"{key}={value}" for key, value in self.get_parameters().items())
        return f"{self.catalog_id}({params})"


class LegendreCoefficient(CatalogCoefficient):
    """Normal form of Legendre's equation: 1/(1-t^2)^2 + n(n+1)/(1-t^2)"""

    catalog_id = "legendre"

    def __init__(self, n: int):
        if int(n) != n or n < 0:
            raise InvalidConfig(f"Legendre degree must be a nonnegative integer, got {n}")
        self.n = int(n)

    def evaluate(self, t: np.ndarray, omega: float) -> np.ndarray:
        w = _one_minus_t2(np.asarray(t, dtype=float))
        return 1.0 / (w * w) + self.n * (self.n + 1.0) / w

    def domain(self) -> Tuple[float, float]:
        return -1.0, 1.0

    def get_parameters(self) -> Dict[str, Any]:
        return {"n": self.n}


class GegenbauerCoefficient(CatalogCoefficient):
    """
    Normal form of the Gegenbauer equation

    q = (a - a^2 + 3/4)/(1-t^2)^2 + (n + a - 1/2)(n + a + 1/2)/(1-t^2),
    satisfied by C_n^a(t) (1-t^2)^((2a+1)/4).
    """

    catalog_id = "gegenbauer"

    def __init__(self, n: int, alpha: float):
        if int(n) != n or n < 0:
            raise InvalidConfig(f"Gegenbauer degree must be a nonnegative integer, got {n}")
        if not alpha > -0.5 or alpha == 0.0:
            raise InvalidConfig(f"Gegenbauer order must satisfy alpha > -1/2, alpha != 0; got {alpha}")
        self.n = int(n)
        self.alpha = float(alpha)

    def evaluate(self, t: np.ndarray, omega: float) -> np.ndarray:
        a, n = self.alpha, self.n
        w = _one_minus_t2(np.asarray(t, dtype=float))
        return (a - a * a + 0.75) / (w * w) + (n + a - 0.5) * (n + a + 0.5) / w

    def domain(self) -> Tuple[float, float]:
        return -1.0, 1.0

    def get_parameters(self) -> Dict[str, Any]:
        return {"n": self.n, "alpha": self.alpha}


class OscillatoryBVPCoefficient(CatalogCoefficient):
    """
    Coefficient of the boundary value test problem on [-1, 1]

    q = (3 t^2 w^2 + t^2 w + 1)/(w^2 - (t^2+1) w + 1) + 2 exp(-t)/(t^2 + 1/10)
    """

    catalog_id = "bvp"

    def evaluate(self, t: np.ndarray, omega: float) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        t2 = t * t
        w = float(omega)
        return (3.0 * t2 * w * w + t2 * w + 1.0) / (w * w - (t2 + 1.0) * w + 1.0) \
            + 2.0 * np.exp(-t) / (t2 + 0.1)

    def get_parameters(self) -> Dict[str, Any]:
        return {}


class ConstantCoefficient(CatalogCoefficient):
    """q(t) = c"""

    catalog_id = "constant"

    def __init__(self, c: float = 1.0):
        self.c = float(c)

    def evaluate(self, t: np.ndarray, omega: float) -> np.ndarray:
        return np.full(np.shape(t), self.c)

    def get_parameters(self) -> Dict[str, Any]:
        return {"c": self.c}


CATALOG: Dict[str, Type[CatalogCoefficient]] = {
    LegendreCoefficient.catalog_id: LegendreCoefficient,
    GegenbauerCoefficient.catalog_id: GegenbauerCoefficient,
    OscillatoryBVPCoefficient.catalog_id: OscillatoryBVPCoefficient,
    ConstantCoefficient.catalog_id: ConstantCoefficient,
}


def from_catalog(catalog_id: str, **params) -> CatalogCoefficient:
    """
    Builds a catalog entry

    Args:
        catalog_id: One of the CATALOG keys
        params: Entry parameters (e.g. n=1024, alpha=0.25)
    """
    if catalog_id not in CATALOG:
        raise InvalidConfig(f"unknown catalog entry {catalog_id!r}; choose from {sorted(CATALOG)}")
    try:
        return CATALOG[catalog_id](**params)
    except TypeError as e:
        raise InvalidConfig(f"bad parameters for {catalog_id!r}: {e}")


def get_available_entries() -> list[str]:
    """Returns the names of the catalog entries"""
    return list(CATALOG.keys())
