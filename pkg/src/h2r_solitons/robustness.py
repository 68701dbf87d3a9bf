"""Sensitivity of the bowl to the axis start radius and to reversing the run."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Sequence

import numpy as np

from .builders import build_bowl
from .config import DEFAULT_CONFIG, IntegratorConfig
from .profile_ode import EventKind, integrate


@dataclass(frozen=True)
class AxisSweep:
    radii: tuple
    slopes: tuple
    spread: float


def axis_radius_sweep(r_eval: float = 5.0, radii: Sequence[float] = (1e-4, 1e-3, 1e-2),
                      cfg: IntegratorConfig = DEFAULT_CONFIG) -> AxisSweep:
    """Bowl slope ``f'(r_eval)`` for several axis start radii and its spread."""
    slopes = []
    for rm in radii:
        prof = build_bowl(max(r_eval + 1.0, 2.0), cfg.with_(r_min_axis=rm))
        slopes.append(float(prof.graph([r_eval])[1][0]))
    return AxisSweep(tuple(radii), tuple(slopes), float(np.ptp(slopes)))


@dataclass(frozen=True)
class Reintegration:
    r_max: float
    r_back: float
    reached: bool
    event: str
    r_stop: float
    discrepancy: float
    detail: Dict[str, float]


def reintegration_check(r_max: float = 10.0, r_back: float = 0.01,
                        cfg: IntegratorConfig = DEFAULT_CONFIG,
                        n: int = 200) -> Reintegration:
    """Run the bowl out to ``r_max``, then backwards from its end state to ``r_back``.

    The discrepancy is the largest difference in ``theta`` between the two runs
    at common radii in ``[r_back, r_max]``. If the backward run never gets
    back to ``r_back`` (it turns around first) the discrepancy is infinite.

    Backward integration towards the axis is unstable for this system:
    perturbations of the bowl grow like ``e^{5 r}`` outwards, so they shrink
    by the same factor on the way in, and rounding at the far end is
    amplified accordingly on the return trip.
    """
    fwd = build_bowl(r_max, cfg)
    end = fwd.state(fwd.t[-1])
    back, ev = integrate(end, end.eps, cfg, direction=-1, r_min=r_back)
    reached = ev.kind is EventKind.AXIS_REACHED
    detail = {"theta_end_forward": float(end.theta), "r_stop": float(ev.state.r)}
    if not reached:
        return Reintegration(r_max, r_back, False, ev.kind.name, float(ev.state.r), float("inf"), detail)
    r = np.linspace(max(r_back, fwd.r.min(), back.r.min()), min(r_max, back.r.max()), n)
    d = float(np.max(np.abs(_theta_at(fwd, r) - _theta_at(back, r))))
    detail["theta_axis_backward"] = float(ev.state.theta)
    return Reintegration(r_max, r_back, True, ev.kind.name, float(ev.state.r), d, detail)


def _theta_at(profile, radii) -> np.ndarray:
    _, slope = profile.graph(radii)
    return np.arctan(slope)
