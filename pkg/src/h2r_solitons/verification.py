"""Pointwise checks of the soliton equation and the identities that go with it.

Conventions: the unit normal of a rotational profile with tangent
``(cos theta, sin theta)`` is ``eta = (-sin theta, cos theta)`` in the
orthonormal frame ``(e_r, e_z)``, so the angle function is ``nu = r' =
cos theta``. ``H`` is the mean ``(kappa1 + kappa2) / 2`` of the principal
curvatures

    kappa1 = r' w'' - r'' w',    kappa2 = w' coth r,

and a soliton satisfies ``H = nu``. Second derivatives of a unit-speed curve
come from ``theta'``: ``r'' = -sin(theta) theta'``, ``w'' = cos(theta) theta'``.
For built profiles ``theta'`` is taken from the soliton system itself.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, List, Optional

import numpy as np

from .profile_ode import AxisSingularityError, ContractError, SolitonProfile, theta_prime

SIGN_TOL = 1e-8


def _dtheta(r, theta, dtheta):
    return theta_prime(r, theta) if dtheta is None else np.asarray(dtheta, dtype=float)


def principal_curvatures(r, theta, dtheta=None):
    """``(kappa1, kappa2)`` of the surface generated by the profile.

    ``dtheta`` defaults to the soliton system's ``theta'``. Raises
    :class:`AxisSingularityError` on the axis; see :func:`vertex_curvatures`.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if np.any(r <= 0):
        raise AxisSingularityError("principal curvatures need r > 0")
    dth = _dtheta(r, theta, dtheta)
    dr, dw = np.cos(theta), np.sin(theta)
    ddr, ddw = -dw * dth, dr * dth
    return dr * ddw - ddr * dw, dw / np.tanh(r)


def vertex_curvatures():
    """Umbilic limit at the bowl vertex: both curvatures tend to ``nu = 1``."""
    return 1.0, 1.0


def mean_curvature(r, theta, dtheta=None):
    k1, k2 = principal_curvatures(r, theta, dtheta)
    return 0.5 * (k1 + k2)


def angle_function(theta):
    return np.cos(theta)


def soliton_residual(r, theta, dtheta=None):
    """``H - nu``."""
    return mean_curvature(r, theta, dtheta) - angle_function(theta)


def weighted_and_conformal_H(r, w, theta, dtheta=None):
    """Weighted mean curvature for the height density and mean curvature in the conformal metric.

    Returns ``(H_h, H_bar)`` with ``H_h = H - nu`` and
    ``H_bar = exp(-w/2) (H - nu)``.
    """
    H_h = soliton_residual(r, theta, dtheta)
    return H_h, np.exp(-0.5 * np.asarray(w, dtype=float)) * H_h


def laplacian_height_identity(r, theta, dtheta=None):
    """Residual of ``Delta_M h = 2 H nu`` on the surface of revolution.

    The Laplacian of the height on the metric ``dt^2 + sinh(r)^2 da^2`` is
    ``w'' + r' coth(r) w'``; the identity holds on every surface, soliton or
    not.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    dth = _dtheta(r, theta, dtheta)
    dr, dw = np.cos(theta), np.sin(theta)
    lap = dr * dth + dr * dw / np.tanh(r)
    return lap - 2.0 * mean_curvature(r, theta, dth) * angle_function(theta)


@dataclass
class CurvatureSample:
    t: float
    r: float
    w: float
    theta: float
    y: float
    kappa1: float
    kappa2: float
    H: float
    H_weighted: float
    H_conformal: float
    residual: float


def curvature_samples(t, r, w, theta, dtheta=None) -> List[CurvatureSample]:
    k1, k2 = principal_curvatures(r, theta, dtheta)
    H = 0.5 * (k1 + k2)
    Hh, Hbar = weighted_and_conformal_H(r, w, theta, dtheta)
    y = np.cos(theta)
    return [CurvatureSample(*map(float, row)) for row in
            zip(t, r, w, theta, y, k1, k2, H, Hh, Hbar, H - y)]


@dataclass
class Extremum:
    kind: str  # "min" or "max"
    index: Optional[int]
    t: float
    r: float
    w: float
    at_axis: bool = False


def height_extrema_census(profile) -> List[Extremum]:
    """Interior local extrema of the height along a profile.

    ``profile`` is a :class:`SolitonProfile` or any object with ``t, r, w``
    sample arrays in curve order. A profile starting on the axis also
    reports its vertex as a minimum when the height grows away from it.
    """
    t = np.asarray(profile.t, dtype=float)
    r = np.asarray(profile.r, dtype=float)
    w = np.asarray(profile.w, dtype=float)
    out: List[Extremum] = []
    if getattr(profile, "from_axis", False) and w.size > 1 and w[1] > w[0]:
        out.append(Extremum("min", None, 0.0, 0.0, float(w[0]), at_axis=True))
    dw = np.sign(np.diff(w))
    nz = np.flatnonzero(dw != 0)
    for a, b in zip(nz[:-1], nz[1:]):
        if dw[a] == dw[b]:
            continue
        # the extremum sits at the sample(s) between the two monotone runs
        i = a + 1 if b == a + 1 else int(a + 1 + np.argmin(w[a + 1:b + 1] * dw[b]))
        kind = "min" if dw[a] < 0 else "max"
        out.append(Extremum(kind, int(i), float(t[i]), float(r[i]), float(w[i])))
    return out


@dataclass
class VerificationReport:
    profile_id: str
    n_samples: int
    max_residuals: dict
    sign_violations: dict
    extrema: list
    thresholds: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max(self.max_residuals[k] for k in ("soliton", "weighted", "conformal_scaled"))

    def passed(self) -> bool:
        tol = self.thresholds.get("residual", 1e-8)
        return (all(v < tol for v in self.max_residuals.values())
                and sum(self.sign_violations.values()) == 0
                and not any(e["kind"] == "max" for e in self.extrema))

    def to_dict(self) -> dict:
        return {
            "profile_id": self.profile_id,
            "n_samples": self.n_samples,
            "max_residual": self.max_residual,
            "max_residuals": self.max_residuals,
            "sign_violations": self.sign_violations,
            "extrema": self.extrema,
            "thresholds": self.thresholds,
            **self.extra,
        }


def sign_law_violations(r, theta, eps, dtheta=None, tol: float = SIGN_TOL) -> dict:
    """Count samples breaking ``sign k1 = sign(-eps y')`` and ``sign k2 = sign eps``.

    Samples within ``tol`` of ``y' = 0`` (first law) or of ``w' = 0``
    (second law) are skipped.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    eps = np.asarray(eps)
    dth = _dtheta(r, theta, dtheta)
    k1, k2 = principal_curvatures(r, theta, dth)
    dy = -np.sin(theta) * dth
    m1 = np.abs(dy) > tol
    m2 = np.abs(np.sin(theta)) > tol
    return {
        "kappa1": int(np.sum(np.sign(k1[m1]) != np.sign(-eps[m1] * dy[m1]))),
        "kappa2": int(np.sum(np.sign(k2[m2]) != np.sign(eps[m2]))),
        "eps_vs_w_prime": int(np.sum(np.sign(np.sin(theta[m2])) != eps[m2])),
    }


def verify_profile(profile: SolitonProfile, profile_id: str = "profile",
                   residual_tol: float = 1e-8) -> VerificationReport:
    """Run every pointwise check on the samples of a profile."""
    t, r, w, th, eps = profile.t, profile.r, profile.w, profile.theta, profile.eps
    dth = theta_prime(r, th)
    res = soliton_residual(r, th, dth)
    Hh, Hbar = weighted_and_conformal_H(r, w, th, dth)
    lap = laplacian_height_identity(r, th, dth)
    k1, k2 = principal_curvatures(r, th, dth)
    H = mean_curvature(r, th, dth)
    max_res = {
        "soliton": float(np.max(np.abs(res))),
        "weighted": float(np.max(np.abs(Hh))),
        "conformal_scaled": float(np.max(np.abs(Hbar) * np.exp(0.5 * w))),
        "laplacian_height": float(np.max(np.abs(lap))),
        "mean_definition": float(np.max(np.abs(2 * H - (k1 + k2)))),
        "unit_speed": float(np.max(np.abs(np.cos(th) ** 2 + np.sin(th) ** 2 - 1.0))),
    }
    extrema = [asdict(e) for e in height_extrema_census(profile)]
    return VerificationReport(
        profile_id, int(t.size), max_res, sign_law_violations(r, th, eps, dth), extrema,
        {"residual": residual_tol, "sign_tol": SIGN_TOL},
    )


# ---------------------------------------------------------------------------
# weighted area and its first variation

@dataclass(frozen=True)
class Bump:
    """Smooth compactly supported normal speed ``omega(t, a)``.

    ``omega = amplitude * b((t - center)/half_width) * (1 + modulation cos(k a + phase))``
    with ``b(s) = exp(1 - 1/(1 - s^2))`` on ``|s| < 1``.
    """

    center: float
    half_width: float
    amplitude: float = 1.0
    modulation: float = 0.0
    k: int = 0
    phase: float = 0.0

    @property
    def support(self):
        return self.center - self.half_width, self.center + self.half_width

    def __call__(self, t, a):
        s = (np.asarray(t, dtype=float) - self.center) / self.half_width
        inside = np.abs(s) < 1
        b = np.zeros_like(s)
        db = np.zeros_like(s)
        q = 1.0 - s[inside] ** 2
        b[inside] = np.exp(1.0 - 1.0 / q)
        db[inside] = b[inside] * (-2.0 * s[inside] / q ** 2) / self.half_width
        ang = 1.0 + self.modulation * np.cos(self.k * a + self.phase)
        dang = -self.modulation * self.k * np.sin(self.k * a + self.phase)
        A = self.amplitude
        return A * b * ang, A * db * ang, A * b * dang


@dataclass(frozen=True)
class Patch:
    """Rotational patch ``t in [t_a, t_b]`` of a unit-speed profile.

    ``curve(t)`` returns ``(r, w, theta, theta')`` arrays.
    """

    curve: Callable
    t_a: float
    t_b: float

    @classmethod
    def from_profile(cls, profile: SolitonProfile, t_a: float, t_b: float) -> "Patch":
        def curve(t):
            r, w, th = profile.evaluate(t)
            return r, w, th, theta_prime(r, th)
        return cls(curve, float(t_a), float(t_b))

    @classmethod
    def horizontal_plane(cls, height: float = 0.0, r_a: float = 0.5, r_b: float = 2.0) -> "Patch":
        def curve(t):
            t = np.asarray(t, dtype=float)
            z = np.zeros_like(t)
            return t, z + height, z, z
        return cls(curve, r_a, r_b)


@dataclass(frozen=True)
class FirstVariation:
    derivative: float  # central difference of the weighted area
    predicted: float  # integral of H_phi omega e^phi over the patch
    scale: float  # integral of |omega| e^phi over the patch


def _gauss_nodes(a, b, panels, order):
    x, wq = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    h = np.diff(edges) / 2
    mids = (edges[:-1] + edges[1:]) / 2
    nodes = (mids[:, None] + h[:, None] * x[None, :]).ravel()
    weights = (h[:, None] * wq[None, :]).ravel()
    return nodes, weights


def _quadrature(patch: Patch, bump: Bump, panels: int, order: int, n_angle: int):
    ta, tb = bump.support
    if ta <= patch.t_a or tb >= patch.t_b:
        raise ContractError("bump support must lie strictly inside the patch")
    t, wt = _gauss_nodes(ta, tb, panels, order)
    a = np.linspace(0.0, 2 * np.pi, n_angle, endpoint=False)
    wa = 2 * np.pi / n_angle
    r, w, th, dth = (np.asarray(v, dtype=float) for v in patch.curve(t))
    if np.any(r <= 0):
        raise ContractError("patch touches the rotation axis")
    T, A = np.meshgrid(t, a, indexing="ij")
    om, om_t, om_a = bump(T, A)
    W = wt[:, None] * wa
    return (r[:, None], w[:, None], th[:, None], dth[:, None]), (om, om_t, om_a), W


def weighted_area(patch: Patch, bump: Bump, eps: float, density_scale: float = 2.0,
                  panels: int = 64, order: int = 8, n_angle: int = 64) -> float:
    """Weighted area ``int exp(density_scale * z) dA`` of the bump-deformed support.

    Points move by ``eps * omega`` against the normal ``eta``. Only the
    support of the bump is integrated, so differences between deformations
    are exact while totals exclude the undeformed remainder of the patch.
    """
    (r, w, th, dth), (om, om_t, om_a), W = _quadrature(patch, bump, panels, order, n_angle)
    s, c = np.sin(th), np.cos(th)
    R = r + eps * om * s
    Z = w - eps * om * c
    R_t = c + eps * (om_t * s + om * c * dth)
    Z_t = s - eps * (om_t * c - om * s * dth)
    R_a = eps * om_a * s
    Z_a = -eps * om_a * c
    g11 = R_t ** 2 + Z_t ** 2
    g22 = R_a ** 2 + np.sinh(R) ** 2 + Z_a ** 2
    g12 = R_t * R_a + Z_t * Z_a
    dA = np.sqrt(g11 * g22 - g12 ** 2)
    return float(np.sum(W * np.exp(density_scale * Z) * dA))


def weighted_area_first_variation(patch: Patch, bump: Bump, density_scale: float = 2.0,
                                  step: float = 1e-3, **quad) -> FirstVariation:
    """Derivative of the weighted area under the bump deformation, two ways.

    ``derivative`` is a five-point central difference of :func:`weighted_area`;
    ``predicted`` is the first-variation integral ``int H_phi omega e^phi dv``
    with ``phi = density_scale * h`` and ``H_phi = kappa1 + kappa2 - <grad phi, eta>``.
    ``density_scale = 2`` is the density whose critical surfaces are exactly
    the solitons ``H = nu``.
    """
    A = {k: weighted_area(patch, bump, k * step, density_scale, **quad) for k in (-2, -1, 1, 2)}
    d = (8 * (A[1] - A[-1]) - (A[2] - A[-2])) / (12 * step)
    (r, w, th, dth), (om, _, _), W = _quadrature(
        patch, bump, quad.get("panels", 64), quad.get("order", 8), quad.get("n_angle", 64))
    k1, k2 = principal_curvatures(r, th, dth)
    H_phi = k1 + k2 - density_scale * np.cos(th)
    dv = W * np.sinh(r) * np.exp(density_scale * w)
    return FirstVariation(float(d), float(np.sum(H_phi * om * dv)), float(np.sum(np.abs(om) * dv)))


def plane_variation_reference(patch: Patch, bump: Bump, density_scale: float = 1.0, **quad) -> float:
    """``-int omega e^{density_scale h} dv`` over a horizontal patch (computed by quadrature)."""
    (r, w, _, _), (om, _, _), W = _quadrature(
        patch, bump, quad.get("panels", 64), quad.get("order", 8), quad.get("n_angle", 64))
    return float(-np.sum(W * om * np.sinh(r) * np.exp(density_scale * w)))
