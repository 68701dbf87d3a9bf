"""Canonical rotational solitons: bowl, translating catenoids, vertical planes.

The bowl is normalised with its vertex at height 0. Besides the arc-length
profile (:func:`build_bowl`) it is available in graph form
(:class:`BowlGraph`), obtained by integrating the slope equation

    phi' = (1 + phi^2) (2 - phi coth r),    f' = phi

in the radial variable. The graph form feeds the height constant ``tau``,
the radial Dirichlet problem and C^1 comparisons with other profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from .config import DEFAULT_CONFIG, R_BUILD_MAX, TIGHT_CONFIG, IntegratorConfig
from .hyperbolic import HyperboloidPoint, minkowski_inner
from .profile_ode import (ContractError, Event, EventKind, IntegrationError, ProfileState,
                          SolitonProfile, axis_series, axis_start, extend, integrate,
                          switch_epsilon)


def build_bowl(r_max: float = 12.0, cfg: IntegratorConfig = DEFAULT_CONFIG) -> SolitonProfile:
    """Generating curve of the bowl soliton from the axis out to ``r_max``."""
    if r_max > R_BUILD_MAX:
        raise ValueError(f"r_max={r_max} beyond the supported range (<= {R_BUILD_MAX})")
    if r_max <= cfg.r_min_axis:
        raise ValueError("r_max must exceed the axis start radius")
    profile, event = integrate(axis_start(cfg), 1, cfg, 1, r_max=r_max, kind="Bowl",
                               from_axis=True)
    if event.kind is not EventKind.R_MAX_REACHED:
        raise IntegrationError(f"bowl integration ended with {event.kind.value}", event.state)
    return profile


@dataclass
class Catenoid:
    """Translating catenoid with neck radius ``neck_radius``.

    ``upper`` starts at the neck and moves outward with ``w`` increasing.
    ``lower`` starts at the neck too, runs down to the turning circle (the
    height minimum, where the orbit passes from eps=+1 to eps=-1) and then
    climbs outward; it has two segments.
    """

    neck_radius: float
    turning_radius: float
    upper: SolitonProfile
    lower: SolitonProfile
    turning_event: Event

    @property
    def neck(self) -> ProfileState:
        return self.upper.state(self.upper.t[0])

    def glued(self) -> SolitonProfile:
        """Whole generating curve ordered by increasing arc length."""
        from .profile_ode import Segment

        segs = []
        for seg in reversed(self.lower.segments):
            segs.append(Segment(seg.t[::-1], seg.u[:, ::-1], seg.eps, seg.dense))
        # junction samples (turning circle, neck) are shared between neighbours
        segs.extend(self.upper.segments)
        return SolitonProfile(segs, "Catenoid", False,
                              self.lower.events + self.upper.events,
                              self.lower.crossings + self.upper.crossings)


def build_catenoid(r0: float, r_max: float = 12.0,
                   cfg: IntegratorConfig = DEFAULT_CONFIG) -> Catenoid:
    """Integrate both wings of the translating catenoid with neck radius ``r0``."""
    if not r0 > 0:
        raise ValueError("neck radius must be positive")
    if r_max > R_BUILD_MAX or r_max <= r0:
        raise ValueError(f"r_max must lie in ({r0}, {R_BUILD_MAX}]")
    neck = ProfileState(0.0, float(r0), 0.0, np.pi / 2)

    upper, ev_up = integrate(neck, 1, cfg, 1, r_max=r_max, kind="CatenoidUpper")
    if ev_up.kind is not EventKind.R_MAX_REACHED:
        raise IntegrationError(f"upper wing ended with {ev_up.kind.value}", ev_up.state)

    inner, ev_turn = integrate(neck, 1, cfg, -1, r_max=r_max, kind="CatenoidLower")
    if ev_turn.kind is not EventKind.HORIZONTAL_TANGENCY:
        raise IntegrationError(f"lower wing ended with {ev_turn.kind.value} before turning",
                               ev_turn.state)
    start, eps = switch_epsilon(ev_turn)
    outer, ev_out = integrate(start, eps, cfg, -1, r_max=r_max, continuation=True,
                              kind="CatenoidLower")
    if ev_out.kind is not EventKind.R_MAX_REACHED:
        raise IntegrationError(f"lower wing ended with {ev_out.kind.value}", ev_out.state)
    lower = extend(inner, outer)
    return Catenoid(float(r0), ev_turn.state.r, upper, lower, ev_turn)


@dataclass(frozen=True)
class VerticalPlane:
    """The minimal soliton ``gamma x R`` over a geodesic of H^2.

    The geodesic passes through ``point`` (hyperboloid model) with unit
    tangent ``direction``; both are Minkowski 3-vectors.
    """

    point: np.ndarray
    direction: np.ndarray

    @classmethod
    def through(cls, r: float = 0.0, angle: float = 0.0, heading: float = np.pi / 2):
        """Geodesic through the point at polar position ``(r, angle)``.

        ``heading`` is measured from the outward radial direction.
        """
        p = np.array([np.sinh(r) * np.cos(angle), np.sinh(r) * np.sin(angle), np.cosh(r)])
        e_r = np.array([np.cosh(r) * np.cos(angle), np.cosh(r) * np.sin(angle), np.sinh(r)])
        e_a = np.array([-np.sin(angle), np.cos(angle), 0.0])
        return cls(p, np.cos(heading) * e_r + np.sin(heading) * e_a)

    def curve(self, s):
        s = np.asarray(s, dtype=float)[..., None]
        return np.cosh(s) * self.point + np.sinh(s) * self.direction

    def curve_acceleration(self, s):
        return self.curve(s)

    def horizontal_normal(self):
        """Unit normal of the geodesic inside H^2 (Lorentzian cross product)."""
        p, v = self.point, self.direction
        n = np.array([p[1] * v[2] - p[2] * v[1],
                      p[2] * v[0] - p[0] * v[2],
                      -(p[0] * v[1] - p[1] * v[0])])
        return n / np.sqrt(minkowski_inner(n, n))

    def surface(self, s, z):
        x = self.curve(s)
        return HyperboloidPoint(x[..., 0], x[..., 1], x[..., 2], np.asarray(z, dtype=float))

    def unit_normal(self):
        """Unit normal of the surface as ``(dx1, dx2, dx3, dz)``; it has no dz part."""
        return np.append(self.horizontal_normal(), 0.0)

    def angle_function(self, s=0.0, z=0.0):
        return np.zeros(np.broadcast(np.asarray(s), np.asarray(z)).shape)

    def mean_curvature(self, s=0.0, z=0.0):
        """Zero: the vertical lines are geodesics and so is ``gamma``."""
        return np.zeros(np.broadcast(np.asarray(s), np.asarray(z)).shape)

    def soliton_residual(self, s=0.0, z=0.0):
        return self.mean_curvature(s, z) - self.angle_function(s, z)


def vertical_plane(r: float = 0.0, angle: float = 0.0, heading: float = np.pi / 2) -> VerticalPlane:
    return VerticalPlane.through(r, angle, heading)


class BowlGraph:
    """The bowl as a radial graph ``f`` over ``[0, r_max]`` with ``f(0) = 0``."""

    def __init__(self, r_max: float = 12.0, cfg: IntegratorConfig = DEFAULT_CONFIG):
        if r_max > R_BUILD_MAX:
            raise ValueError(f"r_max={r_max} beyond the supported range (<= {R_BUILD_MAX})")
        self.r_max = float(r_max)
        self.r0 = cfg.r_min_axis
        phi0, f0, _ = axis_series(self.r0)

        def fun(r, u):
            f, phi = u
            return [phi, (1.0 + phi * phi) * (2.0 - phi / np.tanh(r))]

        sol = solve_ivp(fun, (self.r0, self.r_max), [float(f0), float(phi0)], method="DOP853",
                        rtol=cfg.rel_tol, atol=cfg.abs_tol, dense_output=True)
        if not sol.success:
            raise IntegrationError(f"bowl graph integration failed: {sol.message}")
        self._sol = sol.sol

    def _eval(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r < 0) or np.any(r > self.r_max):
            raise ContractError(f"radius outside [0, {self.r_max}]")
        flat = np.atleast_1d(r).ravel()
        f = np.empty_like(flat)
        phi = np.empty_like(flat)
        near = flat < self.r0
        if near.any():
            phi[near], f[near], _ = axis_series(flat[near])
        if (~near).any():
            f[~near], phi[~near] = self._sol(flat[~near])
        return f.reshape(np.shape(r)), phi.reshape(np.shape(r))

    def f(self, r):
        return self._eval(r)[0]

    def slope(self, r):
        return self._eval(r)[1]

    def curvature_term(self, r):
        """``f''`` from the slope equation."""
        phi = self.slope(r)
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = (1.0 + phi * phi) * (2.0 - phi / np.tanh(r))
        return np.where(r == 0, 1.0, out)

    def graph(self, radii):
        radii = np.atleast_1d(np.asarray(radii, dtype=float))
        return self._eval(radii)


_BOWL_CACHE = {}


def bowl_graph(r_max: float = 12.0, cfg: IntegratorConfig = DEFAULT_CONFIG) -> BowlGraph:
    key = (float(r_max), cfg)
    if key not in _BOWL_CACHE:
        _BOWL_CACHE[key] = BowlGraph(r_max, cfg)
    return _BOWL_CACHE[key]


def tau(sigma, cfg: IntegratorConfig = DEFAULT_CONFIG):
    """Height of the bowl cap over its boundary circle of radius ``sigma``."""
    sigma = np.asarray(sigma, dtype=float)
    if np.any(sigma < 0) or np.any(sigma > R_BUILD_MAX):
        raise ValueError(f"sigma must lie in [0, {R_BUILD_MAX}]")
    g = bowl_graph(max(12.0, float(np.max(sigma))), cfg)
    return g.f(sigma) - g.f(0.0)


@dataclass
class RadialDirichletSolution:
    """Rotational solution ``u`` of the soliton graph equation on a disk of radius ``R``."""

    R: float
    c: float
    bowl: BowlGraph

    def u(self, r):
        return self.c - (self.bowl.f(self.R) - self.bowl.f(r))

    def du(self, r):
        return self.bowl.slope(r)

    def residual(self, r, h: Optional[float] = None):
        """Residual of the radial graph equation with derivatives by finite differences.

        ``2/W - u''/W^3 - u' coth(r)/W`` with ``W = sqrt(1 + u'^2)``; ``u'`` and
        ``u''`` come from sixth-order central differences of ``u`` alone.
        """
        r = np.asarray(r, dtype=float)
        if h is None:
            h = np.minimum(0.02, r / 8)
        U = [self.u(r + k * h) for k in range(-3, 4)]
        d1 = (-U[0] + 9 * U[1] - 45 * U[2] + 45 * U[4] - 9 * U[5] + U[6]) / (60 * h)
        d2 = (2 * U[0] - 27 * U[1] + 270 * U[2] - 490 * U[3] + 270 * U[4] - 27 * U[5]
              + 2 * U[6]) / (180 * h * h)
        W = np.sqrt(1.0 + d1 * d1)
        return 2.0 / W - d2 / W ** 3 - d1 / (np.tanh(r) * W)


def solve_rotational_dirichlet(R: float, c: float = 0.0,
                               cfg: IntegratorConfig = TIGHT_CONFIG) -> RadialDirichletSolution:
    """Rotational graph soliton over the disk of radius ``R`` with ``u = c`` on the boundary.

    Uniqueness up to additive constants makes it a vertical translate of the
    bowl.
    """
    if not R > 0:
        raise ValueError("disk radius must be positive")
    return RadialDirichletSolution(float(R), float(c), bowl_graph(max(12.0, R + 0.1), cfg))


@dataclass(frozen=True)
class C1Distance:
    c0: float
    c1: float
    shift: float


def c1_distance_to_bowl(profile, window=(8.0, 12.0), n: int = 401, segment: int = 0,
                        bowl: Optional[BowlGraph] = None) -> C1Distance:
    """Sup distances between a graphical profile and the bowl over ``window``.

    The additive constant is removed first by the least-squares vertical
    shift. ``profile`` is a :class:`SolitonProfile` (its ``segment`` must be a
    graph over the window) or anything with a ``graph(radii)`` method.
    """
    a, b = window
    if not 0 <= a < b:
        raise ValueError("window must satisfy 0 <= a < b")
    bowl = bowl_graph(max(12.0, b)) if bowl is None else bowl
    radii = np.linspace(a, b, n)
    if isinstance(profile, SolitonProfile):
        g, dg = profile.graph(radii, segment=segment)
    else:
        g, dg = profile.graph(radii)
    f, df = bowl.graph(radii)
    shift = float(np.mean(g - f))
    return C1Distance(float(np.max(np.abs(g - shift - f))), float(np.max(np.abs(dg - df))), shift)
