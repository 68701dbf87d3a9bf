"""The two models of H^2 x R used throughout the package.

Points carry either Minkowski coordinates ``(x1, x2, x3)`` on the upper sheet
of ``x1^2 + x2^2 - x3^2 = -1`` together with a height ``z``, or Poincare disk
coordinates ``(u1, u2)`` with the same height. The two charts are related by
stereographic projection from ``(0, 0, -1)``::

    (u1, u2) = (x1, x2) / (1 + x3)

Fields may be scalars or equally shaped numpy arrays; every function here is
vectorised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .config import R_OVERFLOW

ArrayLike = Union[float, np.ndarray]

HYPERBOLOID_TOL = 1e-12


class DomainError(ValueError):
    """Raised when a point lies outside the model it is claimed to belong to."""


@dataclass(frozen=True)
class HyperboloidPoint:
    x1: ArrayLike
    x2: ArrayLike
    x3: ArrayLike
    z: ArrayLike = 0.0

    def minkowski_norm2(self):
        return self.x1 ** 2 + self.x2 ** 2 - self.x3 ** 2

    def check(self, tol: float = HYPERBOLOID_TOL) -> "HyperboloidPoint":
        """Raise ``DomainError`` unless the point lies on the upper sheet."""
        x3 = np.asarray(self.x3)
        scale = np.maximum(1.0, x3 ** 2)
        if np.any(np.abs(self.minkowski_norm2() + 1.0) > tol * scale):
            raise DomainError("point is not on the hyperboloid x1^2+x2^2-x3^2=-1")
        if np.any(x3 < 1.0 - tol):
            raise DomainError("point is not on the upper sheet (x3 >= 1)")
        return self

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.x1, self.x2, self.x3, self.z), axis=-1)


@dataclass(frozen=True)
class PoincarePoint:
    u1: ArrayLike
    u2: ArrayLike
    z: ArrayLike = 0.0

    def radius2(self):
        return self.u1 ** 2 + self.u2 ** 2

    def check(self) -> "PoincarePoint":
        if np.any(self.radius2() >= 1.0):
            raise DomainError("point is not inside the unit disk")
        return self

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.u1, self.u2, self.z), axis=-1)


@dataclass(frozen=True)
class TangentVector:
    """Tangent vector at ``base`` written in the chart of ``base``.

    For a ``PoincarePoint`` base the components are ``(du1, du2, dz)``; for a
    ``HyperboloidPoint`` base they are ``(dx1, dx2, dx3, dz)``.
    """

    base: Union[HyperboloidPoint, PoincarePoint]
    components: np.ndarray


def to_poincare(p: HyperboloidPoint) -> PoincarePoint:
    """Stereographic projection of the hyperboloid onto the unit disk."""
    d = 1.0 + p.x3
    return PoincarePoint(p.x1 / d, p.x2 / d, p.z)


def to_hyperboloid(q: PoincarePoint) -> HyperboloidPoint:
    """Inverse of :func:`to_poincare`.

    Raises ``DomainError`` outside the disk and ``OverflowError`` when the
    hyperbolic distance to the origin exceeds ``R_OVERFLOW``.
    """
    q.check()
    s = q.radius2()
    if np.any(dist_to_origin(q) > R_OVERFLOW):
        raise OverflowError("hyperbolic radius beyond the overflow guard")
    d = 1.0 - s
    return HyperboloidPoint(2.0 * q.u1 / d, 2.0 * q.u2 / d, (1.0 + s) / d, q.z)


def conformal_factor(q: PoincarePoint):
    """``lambda = 2 / (1 - u1^2 - u2^2)`` of the disk metric ``lambda^2 |du|^2``."""
    s = q.radius2()
    if np.any(s >= 1.0):
        raise DomainError("conformal factor is undefined on or outside the unit circle")
    return 2.0 / (1.0 - s)


def dist_to_origin(q: PoincarePoint):
    """Hyperbolic distance from the disk point to the origin, ``2 artanh |u|``."""
    return 2.0 * np.arctanh(np.sqrt(q.radius2()))


def hyperboloid_dist_to_origin(p: HyperboloidPoint):
    return np.arccosh(np.maximum(p.x3, 1.0))


def from_polar(r: ArrayLike, angle: ArrayLike = 0.0, z: ArrayLike = 0.0) -> HyperboloidPoint:
    """Point at distance ``r`` from the axis in direction ``angle``.

    This is the rotational parametrisation ``(sinh r cos a, sinh r sin a,
    cosh r, z)`` used for surfaces of revolution.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r > R_OVERFLOW):
        raise OverflowError(f"r > {R_OVERFLOW} overflows hyperboloid coordinates")
    sh = np.sinh(r)
    return HyperboloidPoint(sh * np.cos(angle), sh * np.sin(angle), np.cosh(r), z)


def poincare_from_polar(r: ArrayLike, angle: ArrayLike = 0.0, z: ArrayLike = 0.0) -> PoincarePoint:
    """Disk version of :func:`from_polar`; stable for any ``r``."""
    rho = np.tanh(np.asarray(r, dtype=float) / 2.0)
    return PoincarePoint(rho * np.cos(angle), rho * np.sin(angle), z)


def minkowski_inner(a, b):
    """Lorentzian product ``a1 b1 + a2 b2 - a3 b3`` over the last axis."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1] - a[..., 2] * b[..., 2]


def pushforward_to_hyperboloid(v: TangentVector) -> TangentVector:
    """Differential of :func:`to_hyperboloid` applied to a disk tangent vector."""
    q = v.base
    du1, du2, dz = np.moveaxis(np.asarray(v.components, dtype=float), -1, 0)
    u1, u2 = np.asarray(q.u1), np.asarray(q.u2)
    d = 1.0 - q.radius2()
    ds = 2.0 * (u1 * du1 + u2 * du2)
    # x = 2u/d, x3 = (1+s)/d with d = 1-s
    dx1 = 2.0 * du1 / d + 2.0 * u1 * ds / d ** 2
    dx2 = 2.0 * du2 / d + 2.0 * u2 * ds / d ** 2
    dx3 = ds / d + (1.0 + q.radius2()) * ds / d ** 2
    return TangentVector(to_hyperboloid(q), np.stack([dx1, dx2, dx3, dz], axis=-1))


def product_metric_hyperboloid(v: TangentVector, w: TangentVector):
    """Product metric of H^2 x R evaluated in hyperboloid components."""
    a = np.asarray(v.components)
    b = np.asarray(w.components)
    return minkowski_inner(a[..., :3], b[..., :3]) + a[..., 3] * b[..., 3]


def product_metric_poincare(v: TangentVector, w: TangentVector):
    """``lambda^2 (du1 dv1 + du2 dv2) + dz dz'`` at the base point of ``v``."""
    lam = conformal_factor(v.base)
    a = np.asarray(v.components)
    b = np.asarray(w.components)
    return lam ** 2 * (a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1]) + a[..., 2] * b[..., 2]
