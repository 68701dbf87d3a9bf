"""Profile curves of rotational translating solitons.

A rotational surface in H^2 x R is generated by an arc-length curve
``t -> (r(t), w(t))`` in the half plane ``r >= 0`` (distance to the axis,
height). Writing its unit tangent as ``(cos theta, sin theta)``, the soliton
equation ``H = nu`` becomes the regular first-order system

    r' = cos(theta)
    w' = sin(theta)
    theta' = 2 cos(theta) - sin(theta) coth(r)

With ``y = r' = cos(theta)`` and ``eps = sign(w')`` the same curves solve the
autonomous phase system

    r' = y
    y' = (1 - y^2) coth(r) - 2 eps y sqrt(1 - y^2)

which is singular where ``|y| = 1``. Integration is therefore always carried
out in the ``theta`` form; the phase form is exposed for phase-space analysis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .config import DEFAULT_CONFIG, IntegratorConfig


class AxisSingularityError(ValueError):
    """The system was evaluated on or across the rotation axis ``r <= 0``."""


class IntegrationError(RuntimeError):
    """The integrator stopped without reaching an event.

    ``state`` holds the last accepted :class:`ProfileState`.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class ContractError(ValueError):
    """An operation was called outside its documented preconditions."""


@dataclass(frozen=True)
class ProfileState:
    t: float
    r: float
    w: float
    theta: float

    @property
    def y(self) -> float:
        return float(np.cos(self.theta))

    @property
    def eps(self) -> int:
        s = np.sin(self.theta)
        return 1 if s > 0 else (-1 if s < 0 else 0)

    def as_vector(self) -> np.ndarray:
        return np.array([self.r, self.w, self.theta])


@dataclass(frozen=True)
class OrbitSample:
    r: float
    y: float
    eps: int = 1


class EventKind(enum.Enum):
    AXIS_REACHED = "AxisReached"
    HORIZONTAL_TANGENCY = "HorizontalTangency"
    GAMMA_CROSSING = "GammaCrossing"
    R_MAX_REACHED = "RMaxReached"
    T_MAX_REACHED = "TMaxReached"


@dataclass(frozen=True)
class Event:
    kind: EventKind
    t: float
    state: ProfileState
    residual: float = 0.0
    eps: int = 1


def rhs_arclength(s: ProfileState) -> Tuple[float, float, float]:
    """``(r', w', theta')`` of the arc-length soliton system."""
    if not s.r > 0:
        raise AxisSingularityError(f"arc-length system is singular at r={s.r}")
    c, sn = np.cos(s.theta), np.sin(s.theta)
    return c, sn, 2.0 * c - sn / np.tanh(s.r)


def rhs_phase(o: OrbitSample) -> Tuple[float, float]:
    """``(r', y')`` of the phase system for orientation ``o.eps``."""
    if not o.r > 0:
        raise AxisSingularityError(f"phase system is singular at r={o.r}")
    if abs(o.y) > 1:
        raise ContractError(f"|y| must not exceed 1, got {o.y}")
    q = 1.0 - o.y * o.y
    return o.y, q / np.tanh(o.r) - 2.0 * o.eps * o.y * np.sqrt(q)


def phase_field(r, y, eps):
    """Vectorised :func:`rhs_phase` without argument checks."""
    r = np.asarray(r, dtype=float)
    y = np.asarray(y, dtype=float)
    q = 1.0 - y * y
    return y, q / np.tanh(r) - 2.0 * eps * y * np.sqrt(np.maximum(q, 0.0))


def theta_prime(r, theta):
    """Vectorised ``theta'`` of the arc-length system."""
    return 2.0 * np.cos(theta) - np.sin(theta) / np.tanh(r)


def _fun(t, u):
    r, _, th = u
    if r <= 0:
        # forces step rejection instead of aborting the solver
        return np.full(3, np.nan)
    c, s = np.cos(th), np.sin(th)
    return np.array([c, s, 2.0 * c - s / np.tanh(r)])


# Series of the bowl slope f'(r) at the axis: r + r^3/6 - r^5/30.
AXIS_SERIES_SLOPE = (1.0, 1.0 / 6.0, -1.0 / 30.0)


def axis_series(r):
    """Slope, height and arc length of the bowl from its series at the axis.

    Returns ``(phi, f, t)`` with ``phi = f'`` and the vertex at height 0.
    """
    r = np.asarray(r, dtype=float)
    a1, a3, a5 = AXIS_SERIES_SLOPE
    r2 = r * r
    phi = r * (a1 + r2 * (a3 + r2 * a5))
    f = r2 * (a1 / 2 + r2 * (a3 / 4 + r2 * a5 / 6))
    t = r * (1.0 + r2 / 6.0 + r2 * r2 / 120.0)
    return phi, f, t


def axis_start(cfg: IntegratorConfig = DEFAULT_CONFIG) -> ProfileState:
    """State at ``r = cfg.r_min_axis`` on the profile meeting the axis orthogonally with nu = 1."""
    r = cfg.r_min_axis
    phi, f, t = axis_series(r)
    return ProfileState(float(t), r, float(f), float(np.arctan(phi)))


@dataclass
class Segment:
    """A piece of profile with constant orientation sign ``eps``."""

    t: np.ndarray
    u: np.ndarray  # shape (3, n): r, w, theta
    eps: int
    dense: object = field(repr=False, default=None)

    @property
    def t_min(self):
        return float(min(self.t[0], self.t[-1]))

    @property
    def t_max(self):
        return float(max(self.t[0], self.t[-1]))

    def __call__(self, t):
        if self.dense is None:
            raise ContractError("segment was loaded from samples and has no dense output")
        return self.dense(t)


@dataclass
class SolitonProfile:
    """Sampled generating curve with dense-output interpolation.

    ``segments`` are stored in the order they were integrated; the sample
    arrays concatenate them in that order. ``kind`` is one of ``"Bowl"``,
    ``"CatenoidUpper"``, ``"CatenoidLower"`` or ``"Generic"``.
    """

    segments: List[Segment]
    kind: str = "Generic"
    from_axis: bool = False
    events: List[Event] = field(default_factory=list)
    crossings: List[Event] = field(default_factory=list)

    def _cat(self, i):
        parts = []
        for k, seg in enumerate(self.segments):
            arr = seg.t if i is None else seg.u[i]
            # consecutive segments share their junction sample
            parts.append(arr if k == 0 else arr[1:])
        return np.concatenate(parts)

    @property
    def t(self):
        return self._cat(None)

    @property
    def r(self):
        return self._cat(0)

    @property
    def w(self):
        return self._cat(1)

    @property
    def theta(self):
        return self._cat(2)

    @property
    def y(self):
        return np.cos(self.theta)

    @property
    def eps(self):
        parts = []
        for k, seg in enumerate(self.segments):
            n = seg.t.size if k == 0 else seg.t.size - 1
            parts.append(np.full(n, seg.eps, dtype=int))
        return np.concatenate(parts)

    @property
    def theta_prime(self):
        return theta_prime(self.r, self.theta)

    def __len__(self):
        return self.t.size

    def segment_at(self, t: float) -> Segment:
        for seg in self.segments:
            if seg.t_min <= t <= seg.t_max:
                return seg
        raise ContractError(f"t={t} outside the profile")

    def evaluate(self, t) -> np.ndarray:
        """Dense ``(r, w, theta)`` at arc length(s) ``t``; shape (3,) or (3, n)."""
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.full((3, t_arr.size), np.nan)
        for seg in self.segments:
            m = (t_arr >= seg.t_min) & (t_arr <= seg.t_max) & np.isnan(out[0])
            if m.any():
                out[:, m] = seg(t_arr[m])
        if np.isnan(out[0]).any():
            raise ContractError("some arc lengths lie outside the profile")
        return out[:, 0] if np.ndim(t) == 0 else out

    def state(self, t: float) -> ProfileState:
        r, w, th = self.evaluate(float(t))
        return ProfileState(float(t), float(r), float(w), float(th))

    def graph(self, radii, segment: int = 0):
        """Height ``w`` and slope ``dw/dr`` over the given radii.

        The requested segment must be a graph (``r`` strictly monotone and
        ``cos theta`` bounded away from zero) over every radius asked for.
        """
        seg = self.segments[segment]
        r_s = seg.u[0]
        order = np.argsort(r_s)
        if not (np.all(np.diff(r_s) > 0) or np.all(np.diff(r_s) < 0)):
            raise ContractError("segment is not a graph over r")
        radii = np.atleast_1d(np.asarray(radii, dtype=float))
        lo, hi = r_s[order[0]], r_s[order[-1]]
        if radii.min() < lo or radii.max() > hi:
            raise ContractError(f"radii outside graph range [{lo}, {hi}]")
        ts = seg.t[order]
        rs = r_s[order]
        w = np.empty_like(radii)
        dw = np.empty_like(radii)
        for k, rk in enumerate(radii):
            j = int(np.clip(np.searchsorted(rs, rk), 1, rs.size - 1))
            a, b = ts[j - 1], ts[j]
            if rk == rs[j - 1]:
                tk = a
            elif rk == rs[j]:
                tk = b
            else:
                tk = brentq(lambda s: seg(s)[0] - rk, a, b, xtol=1e-15, rtol=1e-15)
            _, wk, thk = seg(tk)
            if abs(np.cos(thk)) < 1e-12:
                raise ContractError(f"vertical tangent at r={rk}")
            w[k] = wk
            dw[k] = np.tan(thk)
        return w, dw


def _samples_between(sol, t0, t1, steps, n):
    grid = np.linspace(t0, t1, n)
    pts = np.concatenate([grid, np.asarray(steps)])
    if t1 >= t0:
        pts = np.unique(pts[(pts >= t0) & (pts <= t1)])
    else:
        pts = np.unique(pts[(pts <= t0) & (pts >= t1)])[::-1]
    return pts, sol(pts)


def integrate(start: ProfileState, eps: int = 1, cfg: IntegratorConfig = DEFAULT_CONFIG,
              direction: int = 1, *, r_max: Optional[float] = None,
              r_min: Optional[float] = None, t_max: Optional[float] = None,
              continuation: bool = False, kind: str = "Generic",
              n_samples: int = 2001, from_axis: bool = False):
    """Integrate the arc-length system from ``start`` until the first event.

    Terminal events are the axis (``r = r_min``, default half of
    ``cfg.r_min_axis``), horizontal tangency (``sin theta = 0``), ``r = r_max``
    and exhaustion of the arc-length budget ``t_max``. Zeros of ``theta'``
    (crossings of the curve where ``y' = 0``) are located but not terminal.

    ``continuation=True`` suppresses a tangency event sitting exactly on the
    start point, which is how a profile is continued after
    :func:`switch_epsilon`.

    Returns ``(profile, event)``.
    """
    if direction not in (1, -1):
        raise ContractError("direction must be +1 or -1")
    if not start.r > 0:
        raise AxisSingularityError("start point must satisfy r > 0; use axis_start")
    r_min = 0.5 * cfg.r_min_axis if r_min is None else r_min
    t_budget = cfg.t_max if t_max is None else t_max
    t0 = start.t
    t_end = t0 + direction * t_budget
    u0 = start.as_vector()

    def seg_eps(theta):
        s = np.sin(theta)
        return 1 if s > 0 else -1 if s < 0 else eps

    if not continuation and abs(np.sin(start.theta)) <= cfg.event_tol:
        seg = Segment(np.array([t0]), u0[:, None], eps)
        ev = Event(EventKind.HORIZONTAL_TANGENCY, t0, start, abs(np.sin(start.theta)), eps)
        return SolitonProfile([seg], kind, from_axis, [ev]), ev

    def tangency(t, u):
        if t == t0 and continuation:
            # sign the orbit takes right after the start point
            return eps * 1e-300
        return np.sin(u[2])
    tangency.terminal = True

    def axis(t, u):
        return u[0] - r_min
    axis.terminal = True
    axis.direction = -1

    def gamma_crossing(t, u):
        r = u[0]
        if r <= 0:
            return 1.0
        return 2.0 * np.cos(u[2]) - np.sin(u[2]) / np.tanh(r)

    events = [axis, tangency, gamma_crossing]
    kinds = [EventKind.AXIS_REACHED, EventKind.HORIZONTAL_TANGENCY, EventKind.GAMMA_CROSSING]
    if r_max is not None:
        def rmax(t, u):
            return u[0] - r_max
        rmax.terminal = True
        rmax.direction = 1
        events.append(rmax)
        kinds.append(EventKind.R_MAX_REACHED)

    sol = solve_ivp(_fun, (t0, t_end), u0, method="DOP853", rtol=cfg.rel_tol,
                    atol=cfg.abs_tol, max_step=cfg.max_step, dense_output=True,
                    events=events)
    if sol.status == -1:
        last = ProfileState(float(sol.t[-1]), *map(float, sol.y[:, -1]))
        raise IntegrationError(f"integration failed: {sol.message}", last)

    crossings = []
    for t_ev, u_ev in zip(sol.t_events[2], sol.y_events[2]):
        st = ProfileState(float(t_ev), *map(float, u_ev))
        res = abs(gamma_crossing(t_ev, u_ev))
        crossings.append(Event(EventKind.GAMMA_CROSSING, float(t_ev), st, res, seg_eps(u_ev[2])))

    t_stop = float(sol.t[-1])
    u_stop = sol.y[:, -1]
    if sol.status == 1:
        # terminal event: whichever terminal list holds t_stop
        kind_ev = None
        for idx in (0, 1, 3):
            if idx < len(events) and len(sol.t_events[idx]) and sol.t_events[idx][-1] == t_stop:
                kind_ev = kinds[idx]
                g = events[idx]
                break
        if kind_ev is None:
            raise IntegrationError("terminal event could not be identified")
        residual = abs(g(t_stop, u_stop)) if kind_ev is not EventKind.HORIZONTAL_TANGENCY \
            else abs(np.sin(u_stop[2]))
    else:
        kind_ev = EventKind.T_MAX_REACHED
        residual = 0.0
    stop_state = ProfileState(t_stop, *map(float, u_stop))

    ts, us = _samples_between(sol.sol, t0, t_stop, sol.t, n_samples)
    ts[0], us[:, 0] = t0, u0
    ts[-1], us[:, -1] = t_stop, u_stop
    # orientation of the interior of the segment
    mid = us[2, us.shape[1] // 2] if us.shape[1] > 2 else start.theta
    seg = Segment(ts, us, seg_eps(mid), sol.sol)
    ev = Event(kind_ev, t_stop, stop_state, float(residual), seg.eps)
    return SolitonProfile([seg], kind, from_axis, [ev], crossings), ev


def switch_epsilon(e: Event) -> Tuple[ProfileState, int]:
    """Continuation data at a horizontal tangency.

    The arc-length system is regular where ``sin theta = 0``, so the curve is
    simply continued through the event; only the orientation sign, and with it
    the phase space the orbit lives in, flips. Returns ``(state, new_eps)``.
    """
    if e.kind is not EventKind.HORIZONTAL_TANGENCY:
        raise ContractError(f"cannot switch orientation at a {e.kind.value} event")
    return e.state, -e.eps


def extend(profile: SolitonProfile, other: SolitonProfile) -> SolitonProfile:
    """Append the segments of ``other`` (which must start where ``profile`` ends)."""
    return SolitonProfile(profile.segments + other.segments, profile.kind,
                          profile.from_axis, profile.events + other.events,
                          profile.crossings + other.crossings)


def profile_from_samples(t: Sequence[float], r, w, theta, eps, kind: str = "Generic") -> SolitonProfile:
    """Rebuild a profile (without dense output) from sample columns."""
    t = np.asarray(t, dtype=float)
    u = np.vstack([np.asarray(r, float), np.asarray(w, float), np.asarray(theta, float)])
    eps = np.asarray(eps, dtype=int)
    cuts = np.flatnonzero(np.diff(eps) != 0) + 1
    segments = []
    bounds = [0, *cuts.tolist(), t.size]
    for a, b in zip(bounds[:-1], bounds[1:]):
        lo = a - 1 if a > 0 else a
        segments.append(Segment(t[lo:b], u[:, lo:b], int(eps[a])))
    return SolitonProfile(segments, kind)
