"""Phase space of the rotational soliton system.

For each orientation sign ``eps`` the orbits ``(r, y)`` live in the half strip
``(0, inf) x (-1, 1)``. The locus where ``y' = 0``,

    r = Gamma_eps(y) = artanh( sqrt(1 - y^2) / (2 eps y) ),

exists only for ``eps*y > 1/sqrt(5)``. Together with ``y = 0`` it cuts the
strip into three regions on which ``y(r)`` is monotone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .config import INV_SQRT5
from .profile_ode import OrbitSample, phase_field

BOUNDARY_TOL = 1e-12


class Region(enum.Enum):
    LAMBDA1_MINUS = "Lambda1Minus"
    LAMBDA1_PLUS = "Lambda1Plus"
    THETA1_MINUS = "Theta1Minus"
    THETA_MINUS1_PLUS = "ThetaMinus1Plus"
    LAMBDA_MINUS1_MINUS = "LambdaMinus1Minus"
    LAMBDA_MINUS1_PLUS = "LambdaMinus1Plus"
    ON_GAMMA = "OnGamma"
    ON_AXIS_Y0 = "OnAxisY0"


# (y, eps) -> (-y, -eps) exchanges these
MIRROR = {
    Region.LAMBDA1_MINUS: Region.LAMBDA_MINUS1_MINUS,
    Region.LAMBDA1_PLUS: Region.LAMBDA_MINUS1_PLUS,
    Region.THETA1_MINUS: Region.THETA_MINUS1_PLUS,
    Region.ON_GAMMA: Region.ON_GAMMA,
    Region.ON_AXIS_Y0: Region.ON_AXIS_Y0,
}
MIRROR.update({v: k for k, v in list(MIRROR.items())})


class Monotonicity(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    EXTREMUM = "extremum"
    ORTHOGONAL = "orthogonal"


def gamma(y, eps: int = 1):
    """Radius of the ``y' = 0`` locus at height ``y`` of the phase strip.

    Raises ``ValueError`` unless ``eps*y > 0`` and ``|y| > 1/sqrt(5)``.
    """
    y = np.asarray(y, dtype=float)
    if np.any(eps * y <= 0):
        raise ValueError("Gamma is defined only where eps*y > 0")
    if np.any(np.abs(y) <= INV_SQRT5):
        raise ValueError("Gamma has an asymptote at |y| = 1/sqrt(5)")
    if np.any(np.abs(y) > 1):
        raise ValueError("|y| must not exceed 1")
    return np.arctanh(np.sqrt(1.0 - y * y) / (2.0 * eps * y))


def gamma_or_inf(y, eps: int = 1):
    """``gamma`` where defined, ``+inf`` elsewhere (vectorised)."""
    y = np.asarray(y, dtype=float)
    out = np.full(y.shape, np.inf)
    ok = (eps * y > INV_SQRT5) & (np.abs(y) <= 1)
    yy = y[ok]
    out[ok] = np.arctanh(np.sqrt(1.0 - yy * yy) / (2.0 * eps * yy))
    return out


def classify(o: OrbitSample, tol: float = BOUNDARY_TOL) -> Region:
    r, y, eps = o.r, o.y, o.eps
    if abs(y) < tol:
        return Region.ON_AXIS_Y0
    g = float(gamma_or_inf(y, eps))
    if np.isfinite(g) and abs(r - g) < tol:
        return Region.ON_GAMMA
    if eps == 1:
        if y < 0:
            return Region.THETA1_MINUS
        return Region.LAMBDA1_PLUS if r > g else Region.LAMBDA1_MINUS
    if y > 0:
        return Region.THETA_MINUS1_PLUS
    return Region.LAMBDA_MINUS1_PLUS if r > g else Region.LAMBDA_MINUS1_MINUS


def classify_grid(r, y, eps: int, tol: float = BOUNDARY_TOL) -> np.ndarray:
    """Vectorised :func:`classify`; returns an object array of ``Region``."""
    r, y = np.broadcast_arrays(np.asarray(r, float), np.asarray(y, float))
    g = gamma_or_inf(y, eps)
    out = np.empty(r.shape, dtype=object)
    beyond = r > g
    if eps == 1:
        out[:] = np.where(y < 0, Region.THETA1_MINUS,
                          np.where(beyond, Region.LAMBDA1_PLUS, Region.LAMBDA1_MINUS))
    else:
        out[:] = np.where(y > 0, Region.THETA_MINUS1_PLUS,
                          np.where(beyond, Region.LAMBDA_MINUS1_PLUS, Region.LAMBDA_MINUS1_MINUS))
    out[np.isfinite(g) & (np.abs(r - g) < tol)] = Region.ON_GAMMA
    out[np.abs(y) < tol] = Region.ON_AXIS_Y0
    return out


def predict_monotonicity(o: OrbitSample, tol: float = BOUNDARY_TOL) -> Monotonicity:
    """Behaviour of the orbit through ``o`` seen as a graph ``y(r)``.

    Where ``Gamma`` does not exist the point counts as lying on the axis side
    of it.
    """
    if abs(o.y) < tol:
        return Monotonicity.ORTHOGONAL
    g = float(gamma_or_inf(o.y, o.eps))
    if np.isfinite(g) and abs(o.r - g) < tol:
        return Monotonicity.EXTREMUM
    beyond = o.r > g
    if o.y > 0:
        return Monotonicity.DECREASING if beyond else Monotonicity.INCREASING
    return Monotonicity.INCREASING if beyond else Monotonicity.DECREASING


@dataclass(frozen=True)
class ScanResult:
    min_norm: float
    argmin: tuple


def equilibrium_scan(r_range=(0.05, 10.0), y_range=(-0.999, 0.999), n=(500, 500),
                     eps: int = 1) -> ScanResult:
    """Smallest ``|F(r, y)|`` of the phase field over a rectangular grid."""
    nr, ny = (n, n) if np.isscalar(n) else n
    r = np.linspace(*r_range, nr)
    y = np.linspace(*y_range, ny)
    R, Y = np.meshgrid(r, y, indexing="ij")
    F1, F2 = phase_field(R, Y, eps)
    norm = np.hypot(F1, F2)
    i, j = np.unravel_index(np.argmin(norm), norm.shape)
    return ScanResult(float(norm[i, j]), (float(r[i]), float(y[j])))


@dataclass
class Portrait:
    """Sampled direction field, region tags and the ``Gamma`` polyline."""

    eps: int
    r: np.ndarray
    y: np.ndarray
    direction: np.ndarray  # (n, 2) unit vectors of F
    regions: np.ndarray
    gamma_y: np.ndarray
    gamma_r: np.ndarray
    asymptotes: tuple

    def field_rows(self):
        for k in range(self.r.size):
            yield (self.r[k], self.y[k], self.direction[k, 0], self.direction[k, 1],
                   self.regions[k].value)


def portrait(eps: int = 1, grid: int = 40, r_range=(0.05, 5.0), y_range=(-0.99, 0.99),
             n_gamma: int = 200) -> Portrait:
    R, Y = np.meshgrid(np.linspace(*r_range, grid), np.linspace(*y_range, grid), indexing="ij")
    r, y = R.ravel(), Y.ravel()
    F1, F2 = phase_field(r, y, eps)
    norm = np.hypot(F1, F2)
    direction = np.column_stack([F1 / norm, F2 / norm])
    regions = classify_grid(r, y, eps)
    # Gamma from its tip at y = eps down towards the asymptote
    s = np.linspace(0.0, 1.0, n_gamma + 1)[:-1]
    gy = eps * (1.0 - s * (1.0 - INV_SQRT5))
    gy = gy[np.abs(gy) > INV_SQRT5]
    gr = gamma(gy, eps)
    keep = gr <= r_range[1]
    return Portrait(eps, r, y, direction, regions, gy[keep], gr[keep], (-INV_SQRT5, INV_SQRT5))
