import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from h2r_solitons.config import INV_SQRT5
from h2r_solitons.phase import (MIRROR, Monotonicity, Region, classify, classify_grid,
                                equilibrium_scan, gamma, gamma_or_inf, portrait,
                                predict_monotonicity)
from h2r_solitons.profile_ode import OrbitSample, phase_field


def artanh_log(x):
    return 0.5 * np.log((1 + x) / (1 - x))


def test_gamma_values():
    assert gamma(1.0, 1) == 0.0
    assert gamma(2 / np.sqrt(5), 1) == pytest.approx(artanh_log(0.25), abs=1e-15)
    assert gamma(2 / np.sqrt(5), 1) == pytest.approx(0.255413, abs=1e-6)
    assert gamma(-0.9, -1) == pytest.approx(gamma(0.9, 1), abs=0)


@pytest.mark.parametrize("y,eps", [(INV_SQRT5, 1), (0.3, 1), (-0.9, 1), (0.9, -1), (0.0, 1)])
def test_gamma_domain_errors(y, eps):
    with pytest.raises(ValueError):
        gamma(y, eps)


def test_gamma_blows_up_at_asymptote():
    assert gamma(INV_SQRT5 + 1e-6, 1) > 6
    ys = np.linspace(INV_SQRT5 + 1e-9, 1, 400)
    assert np.all(np.diff(gamma(ys, 1)) < 0)


def test_classify_examples():
    g = artanh_log(np.sqrt(0.19) / 1.8)
    assert g == pytest.approx(0.247069, abs=1e-6)
    assert gamma(0.9, 1) == pytest.approx(g, abs=1e-15)
    assert classify(OrbitSample(5.0, 0.9, 1)) is Region.LAMBDA1_PLUS
    assert classify(OrbitSample(0.1, 0.9, 1)) is Region.LAMBDA1_MINUS
    assert classify(OrbitSample(3.0, -0.5, 1)) is Region.THETA1_MINUS
    assert classify(OrbitSample(g, 0.9, 1)) is Region.ON_GAMMA
    assert classify(OrbitSample(2.0, 0.0, 1)) is Region.ON_AXIS_Y0


def test_predict_examples():
    assert predict_monotonicity(OrbitSample(5.0, 0.9, 1)) is Monotonicity.DECREASING
    assert predict_monotonicity(OrbitSample(float(gamma(0.9, 1)), 0.9, 1)) is Monotonicity.EXTREMUM
    assert predict_monotonicity(OrbitSample(2.0, 0.0, 1)) is Monotonicity.ORTHOGONAL


def _numeric_dy_dr(r, y, eps, h=1e-7):
    # one RK4 step of dy/dr = F2/F1
    def f(r, y):
        F1, F2 = phase_field(r, y, eps)
        return F2 / F1
    k1 = f(r, y)
    k2 = f(r + h / 2, y + h / 2 * k1)
    k3 = f(r + h / 2, y + h / 2 * k2)
    k4 = f(r + h, y + h * k3)
    return h / 6 * (k1 + 2 * k2 + 2 * k3 + k4) / h


def test_monotonicity_predictions_on_random_samples():
    rng = np.random.default_rng(7)
    n = 10_000
    r = rng.uniform(0.05, 10, n)
    y = rng.uniform(-0.999, 0.999, n)
    eps = rng.choice([-1, 1], n)
    violations = 0
    checked = 0
    for e in (1, -1):
        m = eps == e
        rr, yy = r[m], y[m]
        g = gamma_or_inf(yy, e)
        near = (np.abs(yy) < 1e-6) | (np.isfinite(g) & (np.abs(rr - g) < 1e-6))
        slope = _numeric_dy_dr(rr, yy, e)
        for k in np.flatnonzero(~near):
            pred = predict_monotonicity(OrbitSample(rr[k], yy[k], e))
            expected = Monotonicity.INCREASING if slope[k] > 0 else Monotonicity.DECREASING
            checked += 1
            violations += pred is not expected
    assert checked > 9_900
    assert violations == 0


def test_no_equilibria():
    res = equilibrium_scan((0.05, 10.0), (-0.999, 0.999), (500, 500))
    assert res.min_norm > 0.1
    F1, F2 = phase_field(np.array([0.5, 3.0]), np.array([1.0, 1.0]), 1)
    assert np.allclose(np.hypot(F1, F2), 1.0)
    for e in (1, -1):
        assert equilibrium_scan((0.01, 20.0), (-1.0, 1.0), (97, 131), eps=e).min_norm > 0


def test_equilibrium_scan_brute_force_oracle():
    # independent evaluation of |F| on the same grid, coth via exponentials
    r = np.linspace(0.05, 10, 500)[:, None]
    y = np.linspace(-0.999, 0.999, 500)[None, :]
    coth = (np.exp(r) + np.exp(-r)) / (np.exp(r) - np.exp(-r))
    F2 = (1 - y ** 2) * coth - 2 * y * np.sqrt(1 - y ** 2)
    oracle = np.min(np.hypot(y + 0 * r, F2))
    assert equilibrium_scan().min_norm == pytest.approx(oracle, rel=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.01, 20), st.floats(-0.999, 0.999), st.sampled_from([1, -1]))
def test_classify_mirror_symmetry(r, y, eps):
    a = classify(OrbitSample(r, y, eps))
    b = classify(OrbitSample(r, -y, -eps))
    assert MIRROR[a] is b


@pytest.mark.parametrize("eps", [1, -1])
def test_classify_grid_matches_scalar(eps):
    rng = np.random.default_rng(3)
    r = rng.uniform(0.01, 8, 500)
    y = rng.uniform(-0.99, 0.99, 500)
    grid = classify_grid(r, y, eps)
    assert all(grid[k] is classify(OrbitSample(r[k], y[k], eps)) for k in range(500))


@pytest.mark.parametrize("eps", [1, -1])
def test_portrait_contract(eps):
    p = portrait(eps, grid=30)
    assert all(p.regions[k] is classify(OrbitSample(p.r[k], p.y[k], eps)) for k in range(p.r.size))
    assert np.max(np.abs(p.gamma_r - gamma(p.gamma_y, eps))) < 1e-12
    assert p.asymptotes == pytest.approx((-0.447214, 0.447214), abs=1e-6)
    assert np.allclose(np.hypot(*p.direction.T), 1.0)
    rows = list(p.field_rows())
    assert len(rows) == 900 and isinstance(rows[0][-1], str)
