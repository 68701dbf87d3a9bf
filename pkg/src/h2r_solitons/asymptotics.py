"""Behaviour at infinity of rotational graphical solitons.

The slope ``phi = f'`` of a rotational graph soliton solves

    phi' = (1 + phi^2) (2 - phi coth r).

Every solution starting from ``phi(R) = phi0 > 0`` tends to 2. Writing
``phi = 2 tanh r + psi`` the deviation obeys

    psi' = -(psi / tanh r) (1 + (2 tanh r + psi)^2) - 2 / cosh(r)^2,

and ``psi`` is squeezed between explicit bounds. Far out the deviation is
many orders of magnitude below ``phi`` itself, so the integration is carried
out in the ``psi`` variable, which keeps it at full relative accuracy.

The closed-form comparison profile is

    f_model(r) = 2 log cosh r + (1/4) log( cosh(r)^2 / (5 cosh 2r - 3) ),

with ``f_model' - 2 tanh r = -4 tanh r / (5 cosh 2r - 3)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import solve_ivp

from .profile_ode import IntegrationError

#: f_model(r) - 2r tends to this constant.
MODEL_OFFSET = -2.0 * np.log(2.0) - 0.25 * np.log(10.0)

#: Smallest left end of a window in which the linear asymptote is resolved.
ASYMPTOTIC_WINDOW_MIN = 8.0


def psi_rhs(r, psi):
    t = np.tanh(r)
    return -(psi / t) * (1.0 + (2.0 * t + psi) ** 2) - 2.0 / np.cosh(r) ** 2


def phi_rhs(r, phi):
    return (1.0 + phi * phi) * (2.0 - phi / np.tanh(r))


@dataclass
class PhiSolution:
    R: float
    phi0: float
    r_end: float
    r: np.ndarray
    _dense: Callable

    def psi(self, r=None):
        if r is None:
            r = self.r
        r = np.asarray(r, dtype=float)
        if np.any(r < self.R) or np.any(r > self.r_end):
            raise ValueError(f"r outside [{self.R}, {self.r_end}]")
        return self._dense(r)[0]

    def phi(self, r=None):
        if r is None:
            r = self.r
        return 2.0 * np.tanh(r) + self.psi(r)

    def dpsi(self, r=None):
        """``psi'`` from the deviation equation."""
        if r is None:
            r = self.r
        return psi_rhs(r, self.psi(r))

    def dphi(self, r=None):
        """``phi'`` written as ``-(1 + phi^2) psi coth r``, free of cancellation."""
        if r is None:
            r = self.r
        return -(1.0 + self.phi(r) ** 2) * self.psi(r) / np.tanh(r)


def solve_phi(R: float, phi0: float, r_end: float = 20.0, rtol: float = 1e-12,
              n_samples: int = 2001) -> PhiSolution:
    """Solve the slope equation on ``[R, r_end]`` from ``phi(R) = phi0``."""
    if not R > 0:
        raise ValueError("R must be positive")
    if not phi0 > 0:
        raise ValueError("phi0 must be positive")
    if not r_end > R:
        raise ValueError("r_end must exceed R")
    psi0 = phi0 - 2.0 * np.tanh(R)

    def fun(r, u):
        return [psi_rhs(r, u[0])]

    sol = solve_ivp(fun, (R, r_end), [psi0], method="DOP853", rtol=rtol, atol=1e-300,
                    dense_output=True)
    if not sol.success:
        raise IntegrationError(f"slope equation failed before r_end={r_end}: {sol.message}")
    r = np.unique(np.concatenate([np.linspace(R, r_end, n_samples), sol.t]))
    return PhiSolution(float(R), float(phi0), float(r_end), r, sol.sol)


def psi(sol: PhiSolution, r=None):
    """Samples ``(r, psi(r))`` of ``psi = phi - 2 tanh r``."""
    r = sol.r if r is None else np.asarray(r, dtype=float)
    return r, sol.psi(r)


def lower_bound(r):
    """``2 tanh r / (cosh^2 r (1 + 4 tanh^2 r))``, a lower bound of ``-psi`` where psi' > 0."""
    t = np.tanh(r)
    return 2.0 * t / (np.cosh(r) ** 2 * (1.0 + 4.0 * t * t))


def upper_bound(r, eps0: float):
    """Upper bound of ``-psi`` for large ``r`` given a tolerance ``eps0``."""
    t = np.tanh(r)
    q = 1.0 + (2.0 * t - eps0) ** 2
    return 2.0 * t / (np.cosh(r) ** 2 * q) + eps0 * t / q


def _from_index(mask: np.ndarray, r: np.ndarray) -> Optional[float]:
    """Smallest sample radius beyond which ``mask`` holds at every sample."""
    if not mask[-1]:
        return None
    bad = np.flatnonzero(~mask)
    return float(r[0] if bad.size == 0 else r[bad[-1] + 1])


def squeeze_threshold(sol: PhiSolution, eps: float) -> Optional[float]:
    """First sample radius beyond which ``2(1-eps) tanh r <= phi <= 2 tanh r`` holds."""
    r = sol.r
    p = sol.psi(r)
    t2 = 2.0 * np.tanh(r)
    # phi <= 2 tanh r  <=>  psi <= 0 ; phi >= 2(1-eps) tanh r  <=>  psi >= -eps 2 tanh r
    ok = (p <= 0) & (p >= -eps * t2)
    return _from_index(ok, r)


def upper_bound_threshold(sol: PhiSolution, eps0: float) -> Optional[float]:
    r = sol.r
    return _from_index(-sol.psi(r) < upper_bound(r, eps0), r)


def lower_bound_violations(sol: PhiSolution, r=None) -> np.ndarray:
    """Radii where ``psi' > 0`` but the lower bound on ``-psi`` fails."""
    r = sol.r if r is None else np.asarray(r, dtype=float)
    p = sol.psi(r)
    dp = psi_rhs(r, p)
    bad = (dp > 0) & ~(-p > lower_bound(r))
    return r[bad]


def measured_thresholds(sol: PhiSolution, eps_list=(0.1, 0.01), eps0: float = 1e-3) -> dict:
    """Radii from which each asymptotic property holds on the sampled solution."""
    r = sol.r
    p = sol.psi(r)
    dp = psi_rhs(r, p)
    out = {
        "phi_below_2tanh": _from_index(p <= 0, r),
        "psi_increasing": _from_index(dp > 0, r),
        "phi_increasing": _from_index(sol.dphi(r) > 0, r),
        f"upper_bound_eps0={eps0:g}": upper_bound_threshold(sol, eps0),
    }
    for e in eps_list:
        out[f"squeeze_eps={e:g}"] = squeeze_threshold(sol, e)
    return out


def model_f(r):
    r = np.asarray(r, dtype=float)
    log_cosh = np.logaddexp(r, -r) - np.log(2.0)
    return 2.0 * log_cosh + 0.25 * model_log_term(r)


def model_log_term(r):
    """``log(cosh^2 r / (5 cosh 2r - 3))``; tends to ``-log 10``."""
    r = np.asarray(r, dtype=float)
    c2 = np.cosh(2.0 * r)
    return np.log((c2 + 1.0) / (2.0 * (5.0 * c2 - 3.0)))


def model_phi(r):
    """Derivative of :func:`model_f`, term by term."""
    r = np.asarray(r, dtype=float)
    t = np.tanh(r)
    return 2.0 * t + 0.25 * (2.0 * t - 10.0 * np.sinh(2.0 * r) / (5.0 * np.cosh(2.0 * r) - 3.0))


def model_psi(r):
    r = np.asarray(r, dtype=float)
    return -4.0 * np.tanh(r) / (5.0 * np.cosh(2.0 * r) - 3.0)


@dataclass(frozen=True)
class OffsetResult:
    k: float
    variation: float
    window: tuple
    resolved: bool


def asymptotic_offset(f, window=(8.0, 12.0), n: int = 401) -> OffsetResult:
    """Constant ``k`` in ``f(r) = 2r + k`` estimated over ``window``.

    ``f`` is a callable, or an object with a ``graph(radii)`` method
    returning heights first. ``k`` is the mean of ``f(r) - 2r`` over the
    window and ``variation`` its spread. Windows starting below r = 8 are
    flagged unresolved with a warning.
    """
    a, b = window
    if not b >= a:
        raise ValueError("window must satisfy a <= b")
    resolved = a >= ASYMPTOTIC_WINDOW_MIN
    if not resolved:
        warnings.warn(f"window starts at r={a} < {ASYMPTOTIC_WINDOW_MIN}; "
                      "the linear asymptote is not resolved there", stacklevel=2)
    r = np.linspace(a, b, n)
    if callable(f):
        vals = np.asarray(f(r), dtype=float)
    else:
        vals = np.asarray(f.graph(r)[0], dtype=float)
    d = vals - 2.0 * r
    return OffsetResult(float(np.mean(d)), float(np.max(d) - np.min(d)), (a, b), resolved)


def bounds_table(sol: PhiSolution, eps0: float = 1e-3):
    """Columns ``r, phi, psi, psi_upper, psi_lower`` for plotting.

    ``psi_upper = -lower_bound`` and ``psi_lower = -upper_bound(eps0)`` bracket
    ``psi`` once the respective thresholds are passed.
    """
    r = sol.r
    return {
        "r": r,
        "phi": sol.phi(r),
        "psi": sol.psi(r),
        "psi_upper": -lower_bound(r),
        "psi_lower": -upper_bound(r, eps0),
    }
