"""Numerical constants and tolerance records shared by every module."""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace

import numpy as np

#: Limit value of the angle function along the ends of graphical solitons.
INV_SQRT5 = 1.0 / np.sqrt(5.0)

#: sinh/cosh overflow guard for hyperboloid coordinates.
R_OVERFLOW = 700.0

#: Builders refuse radii above this (asymptotic windows live well below it).
R_BUILD_MAX = 30.0


@dataclass(frozen=True)
class IntegratorConfig:
    """Tolerances for the profile integrator.

    ``r_min_axis`` is the radius at which the series solution through the
    rotation axis hands over to the adaptive integrator.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_step: float = np.inf
    event_tol: float = 1e-12
    r_min_axis: float = 1e-3
    t_max: float = 200.0

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol", "max_step", "event_tol", "r_min_axis", "t_max"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")
        if self.event_tol > self.abs_tol:
            raise ValueError("event_tol must not exceed abs_tol")

    def with_(self, **changes) -> "IntegratorConfig":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        d = asdict(self)
        # json has no inf
        d["max_step"] = None if np.isinf(self.max_step) else self.max_step
        return d


DEFAULT_CONFIG = IntegratorConfig()

#: Tight settings used for reference solutions and consistency checks.
TIGHT_CONFIG = IntegratorConfig(abs_tol=1e-13, rel_tol=1e-13, event_tol=1e-13)
