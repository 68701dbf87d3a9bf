import numpy as np
import pytest
import sympy as sp
from scipy.integrate import solve_ivp

from h2r_solitons.builders import build_bowl
from h2r_solitons.config import DEFAULT_CONFIG, TIGHT_CONFIG, IntegratorConfig
from h2r_solitons.phase import gamma
from h2r_solitons.profile_ode import (AXIS_SERIES_SLOPE, AxisSingularityError, ContractError,
                                      Event, EventKind, OrbitSample, ProfileState, axis_series,
                                      axis_start, integrate, profile_from_samples, rhs_arclength,
                                      rhs_phase, switch_epsilon)


def coth_exp(r):
    return (np.exp(r) + np.exp(-r)) / (np.exp(r) - np.exp(-r))


def test_rhs_arclength_examples():
    assert rhs_arclength(ProfileState(0.0, 1.0, 0.0, 0.0)) == pytest.approx((1.0, 0.0, 2.0), abs=1e-15)
    dr, dw, dth = rhs_arclength(ProfileState(0.0, 1.0, 0.0, np.pi / 2))
    assert dr == pytest.approx(0.0, abs=1e-15)
    assert dw == 1.0
    assert dth == pytest.approx(-coth_exp(1.0), abs=1e-14)
    assert dth == pytest.approx(-1.31304, abs=1e-5)


@pytest.mark.parametrize("r", [0.0, -1.0])
def test_rhs_rejects_axis(r):
    with pytest.raises(AxisSingularityError):
        rhs_arclength(ProfileState(0.0, r, 0.0, np.pi / 2))
    with pytest.raises(AxisSingularityError):
        rhs_phase(OrbitSample(r, 0.5, 1))


def test_theta_prime_blows_up_near_axis():
    assert rhs_arclength(ProfileState(0.0, 1e-12, 0.0, np.pi / 2))[2] < -1e11


def test_rhs_phase_examples():
    assert rhs_phase(OrbitSample(1.0, 0.0, 1)) == pytest.approx((0.0, coth_exp(1.0)), abs=1e-14)
    for r in (0.3, 2.0, 7.0):
        assert rhs_phase(OrbitSample(r, 1.0, 1)) == (1.0, 0.0)
    r0 = float(gamma(0.9, 1))
    assert abs(rhs_phase(OrbitSample(r0, 0.9, 1))[1]) < 1e-12


def test_config_contracts():
    with pytest.raises(ValueError):
        IntegratorConfig(abs_tol=-1.0)
    with pytest.raises(ValueError):
        IntegratorConfig(abs_tol=1e-12, event_tol=1e-10)
    assert DEFAULT_CONFIG.to_dict()["max_step"] is None


def test_axis_series_coefficients_symbolic():
    # phi' = (1 + phi^2)(2 - phi coth r) with an odd power series through the origin
    r, a, b, c = sp.symbols("r a b c")
    phi = c * r + a * r ** 3 + b * r ** 5
    res = sp.diff(phi, r) - (1 + phi ** 2) * (2 - phi * sp.cosh(r) / sp.sinh(r))
    ser = sp.series(res, r, 0, 5).removeO()
    sol = sp.solve([ser.coeff(r, k) for k in (0, 2, 4)], [c, a, b], dict=True)
    sol = [s for s in sol if s[c] != 0]
    assert len(sol) == 1
    assert (sol[0][c], sol[0][a], sol[0][b]) == (1, sp.Rational(1, 6), sp.Rational(-1, 30))
    assert AXIS_SERIES_SLOPE == (1.0, 1 / 6, -1 / 30)


def test_axis_series_values():
    phi, f, t = axis_series(0.0)
    assert (phi, f, t) == (0.0, 0.0, 0.0)
    r = 0.05
    phi, f, t = axis_series(r)
    assert f == pytest.approx(r ** 2 / 2 + r ** 4 / 24, abs=r ** 6)
    # arc length is the integral of sqrt(1 + phi^2)
    from scipy.integrate import quad
    t_ref = quad(lambda s: np.sqrt(1 + axis_series(s)[0] ** 2), 0, r, epsabs=1e-16)[0]
    assert t == pytest.approx(t_ref, abs=r ** 7)


def test_axis_start_state():
    s = axis_start(DEFAULT_CONFIG)
    assert s.r == DEFAULT_CONFIG.r_min_axis
    assert s.y == pytest.approx(1.0, abs=1e-6)
    assert 0 < s.theta < 2e-3


def test_catenoid_upper_start_moves_outward():
    prof, ev = integrate(ProfileState(0.0, 1.0, 0.0, np.pi / 2), 1, DEFAULT_CONFIG, 1, r_max=3.0)
    assert ev.kind is EventKind.R_MAX_REACHED
    assert np.all(np.diff(prof.r[:50]) > 0)
    assert prof.theta[1] < np.pi / 2


def test_start_on_tangency_is_immediate_event():
    start = ProfileState(0.0, 1.0, 0.0, 0.0)
    prof, ev = integrate(start, 1, DEFAULT_CONFIG, 1, r_max=5.0)
    assert ev.kind is EventKind.HORIZONTAL_TANGENCY
    assert ev.t == 0.0 and len(prof) == 1


def test_integrate_contracts():
    with pytest.raises(AxisSingularityError):
        integrate(ProfileState(0.0, 0.0, 0.0, 0.0))
    with pytest.raises(ContractError):
        integrate(ProfileState(0.0, 1.0, 0.0, 1.0), direction=2)


def test_switch_epsilon_contract():
    ev = Event(EventKind.R_MAX_REACHED, 1.0, ProfileState(1.0, 2.0, 0.0, 1.0), 0.0, 1)
    with pytest.raises(ContractError):
        switch_epsilon(ev)
    ev = Event(EventKind.HORIZONTAL_TANGENCY, 1.0, ProfileState(1.0, 2.0, 0.0, np.pi), 0.0, 1)
    state, eps = switch_epsilon(ev)
    assert eps == -1 and state is ev.state


def test_t_max_event():
    prof, ev = integrate(ProfileState(0.0, 1.0, 0.0, 0.3), 1, DEFAULT_CONFIG, 1, t_max=0.5)
    assert ev.kind is EventKind.T_MAX_REACHED
    assert ev.t == pytest.approx(0.5)


def test_unit_speed_and_event_residuals(bowl, catenoid):
    for prof in (bowl, catenoid.glued()):
        th = prof.theta
        assert np.max(np.abs(np.cos(th) ** 2 + np.sin(th) ** 2 - 1)) < 1e-13
        for ev in prof.events:
            assert ev.residual < DEFAULT_CONFIG.event_tol


def test_phase_and_arclength_systems_agree():
    # y(r) from the phase system in r versus cos(theta) along the arc-length solution
    start = ProfileState(0.0, 0.5, 0.0, 0.4)
    prof, ev = integrate(start, 1, TIGHT_CONFIG, 1, r_max=4.0)
    assert ev.kind is EventKind.R_MAX_REACHED

    def dy_dr(r, y):
        _, dy = rhs_phase(OrbitSample(r, y[0], 1))
        return [dy / y[0]]

    ref = solve_ivp(dy_dr, (0.5, 4.0), [np.cos(0.4)], method="DOP853", rtol=1e-12, atol=1e-13,
                    dense_output=True)
    assert np.max(np.abs(ref.sol(prof.r)[0] - prof.y)) < 1e-9


def test_orbit_is_local_graph_of_phase_equation(catenoid):
    prof = catenoid.upper
    r, y = prof.r, prof.y
    # centered differences on the graph part of the wing
    m = slice(200, -200)
    dydr = np.gradient(y, r)[m]
    _, F2 = np.array([rhs_phase(OrbitSample(a, b, 1)) for a, b in zip(r[m], y[m])]).T
    pred = F2 / y[m]
    sel = (r[m] > 1.7) & (r[m] < 6)
    spacing = np.max(np.diff(r[m][sel]))
    assert spacing < 0.01
    assert np.max(np.abs(dydr[sel] - pred[sel])) < 1e-6 + 10 * spacing ** 2


def test_properness_only_terminal_events(bowl, catenoids):
    for c in catenoids.values():
        for prof in (c.upper, c.lower):
            assert prof.events[-1].kind is EventKind.R_MAX_REACHED
    assert bowl.events[-1].kind is EventKind.R_MAX_REACHED


def test_samples_round_trip_through_columns(catenoid):
    g = catenoid.glued()
    back = profile_from_samples(g.t, g.r, g.w, g.theta, g.eps)
    assert np.array_equal(back.t, g.t)
    assert np.array_equal(back.theta, g.theta)
    assert np.array_equal(back.eps, g.eps)


def test_axis_radius_sweep_stable():
    vals = [build_bowl(6.0, DEFAULT_CONFIG.with_(r_min_axis=rm)).graph([5.0])[1][0]
            for rm in (1e-4, 1e-3, 1e-2)]
    assert np.ptp(vals) < 1e-8


def test_restart_from_interior_sample_reproduces_profile(bowl):
    # forward restarts are well conditioned: the bowl attracts nearby orbits
    k = np.searchsorted(bowl.r, 0.5)
    s = ProfileState(bowl.t[k], bowl.r[k], bowl.w[k], bowl.theta[k])
    prof, ev = integrate(s, 1, DEFAULT_CONFIG, 1, r_max=12.0)
    assert abs(ev.state.w - bowl.w[-1]) < 1e-9
    assert abs(ev.state.theta - bowl.theta[-1]) < 1e-10
