import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from h2r_solitons.hyperbolic import (DomainError, HyperboloidPoint, PoincarePoint, TangentVector,
                                     conformal_factor, dist_to_origin, from_polar,
                                     hyperboloid_dist_to_origin, poincare_from_polar,
                                     product_metric_hyperboloid, product_metric_poincare,
                                     pushforward_to_hyperboloid, to_hyperboloid, to_poincare)

EPS_MACH = np.finfo(float).eps


def test_origin_maps_to_origin():
    q = to_poincare(HyperboloidPoint(0.0, 0.0, 1.0, 2.5))
    assert (q.u1, q.u2, q.z) == (0.0, 0.0, 2.5)
    p = to_hyperboloid(PoincarePoint(0.0, 0.0, 0.0))
    assert (p.x1, p.x2, p.x3, p.z) == (0.0, 0.0, 1.0, 0.0)


def test_unit_distance_point():
    q = to_poincare(HyperboloidPoint(np.sinh(1.0), 0.0, np.cosh(1.0), 0.0))
    assert q.u1 == pytest.approx(np.tanh(0.5), abs=1e-15)
    assert dist_to_origin(q) == pytest.approx(1.0, abs=1e-14)
    p = to_hyperboloid(PoincarePoint(np.tanh(0.5), 0.0, 0.0))
    assert np.allclose([p.x1, p.x2, p.x3, p.z], [np.sinh(1), 0, np.cosh(1), 0], atol=1e-12, rtol=0)


def test_conformal_factor_values():
    assert conformal_factor(PoincarePoint(0.0, 0.0)) == 2.0
    u = np.tanh(0.5)
    lam = conformal_factor(PoincarePoint(u, 0.0))
    assert lam == pytest.approx(2 * np.cosh(0.5) ** 2, rel=1e-14)
    assert lam == pytest.approx(2.0 / (1.0 - u * u), rel=1e-15)
    assert lam == pytest.approx(2.5430806, abs=1e-7)


@pytest.mark.parametrize("u", [(1.0, 0.0), (0.6, 0.8), (0.0, -1.0), (2.0, 0.0)])
def test_conformal_factor_rejects_boundary(u):
    with pytest.raises(DomainError):
        conformal_factor(PoincarePoint(*u))


def test_to_hyperboloid_rejects_outside_disk():
    with pytest.raises(DomainError):
        to_hyperboloid(PoincarePoint(1.0, 0.0))


def test_overflow_guard():
    with pytest.raises(OverflowError):
        from_polar(701.0)
    q = poincare_from_polar(800.0)
    assert q.u1 <= 1.0


def test_dist_monotone_in_radius():
    u = np.linspace(0, 0.999, 500)
    d = dist_to_origin(PoincarePoint(u, 0 * u))
    assert d[0] == 0.0
    assert np.all(np.diff(d) > 0)


def test_random_disk_points_land_on_hyperboloid():
    rng = np.random.default_rng(1)
    rho = np.sqrt(rng.uniform(0, 0.98, 100))
    a = rng.uniform(0, 2 * np.pi, 100)
    p = to_hyperboloid(PoincarePoint(rho * np.cos(a), rho * np.sin(a), rng.normal(size=100)))
    p.check()
    assert np.max(np.abs(p.minkowski_norm2() + 1)) < 1e-12
    assert np.all(p.x3 >= 1)


def test_round_trip_random_points():
    rng = np.random.default_rng(2)
    r = rng.uniform(0, 5, 100)
    a = rng.uniform(0, 2 * np.pi, 100)
    p = from_polar(r, a, rng.normal(size=100))
    back = to_hyperboloid(to_poincare(p))
    assert np.max(np.abs(back.as_array() - p.as_array())) < 1e-12


def test_distance_preserved_well_conditioned_range():
    r = np.linspace(0, 9.5, 2001)
    q = to_poincare(HyperboloidPoint(np.sinh(r), 0 * r, np.cosh(r), 0 * r))
    assert np.max(np.abs(dist_to_origin(q) - r)) < 1e-12


def test_distance_preserved_to_float_conditioning():
    # beyond r ~ 10 the disk radius carries only ~eps * cosh(r/2)^2 worth of r
    r = np.linspace(0, 20, 2001)
    q = to_poincare(HyperboloidPoint(np.sinh(r), 0 * r, np.cosh(r), 0 * r))
    err = np.abs(dist_to_origin(q) - r)
    assert np.all(err <= np.maximum(1e-12, 8 * EPS_MACH * np.cosh(r / 2) ** 2))
    p = from_polar(r)
    assert np.max(np.abs(hyperboloid_dist_to_origin(p)[r > 1] - r[r > 1])) < 1e-12


disk_pt = st.tuples(st.floats(0, 0.95), st.floats(0, 2 * np.pi), st.floats(-10, 10))
vec = st.tuples(*[st.floats(-3, 3)] * 3)


@settings(max_examples=200, deadline=None)
@given(disk_pt, vec, vec)
def test_metric_pullback(pt, v, w):
    rho, a, z = pt
    q = PoincarePoint(np.sqrt(rho) * np.cos(a), np.sqrt(rho) * np.sin(a), z)
    tv, tw = TangentVector(q, np.array(v)), TangentVector(q, np.array(w))
    lhs = product_metric_hyperboloid(pushforward_to_hyperboloid(tv), pushforward_to_hyperboloid(tw))
    rhs = product_metric_poincare(tv, tw)
    scale = max(1.0, product_metric_poincare(tv, tv), product_metric_poincare(tw, tw))
    assert abs(lhs - rhs) <= 1e-10 * scale


@settings(max_examples=100, deadline=None)
@given(disk_pt, vec)
def test_pushforward_matches_finite_difference(pt, v):
    rho, a, z = pt
    u = np.array([np.sqrt(rho) * np.cos(a), np.sqrt(rho) * np.sin(a), z])
    v = np.array(v)
    h = 1e-6

    def X(x):
        return to_hyperboloid(PoincarePoint(*x)).as_array()

    fd = (X(u + h * v) - X(u - h * v)) / (2 * h)
    pf = pushforward_to_hyperboloid(TangentVector(PoincarePoint(*u), v)).components
    assert np.allclose(pf, fd, rtol=1e-6, atol=1e-6)


@settings(max_examples=200, deadline=None)
@given(st.floats(0, 8), st.floats(-np.pi, np.pi), st.floats(-50, 50))
def test_model_round_trip_property(r, a, z):
    p = from_polar(r, a, z)
    back = to_hyperboloid(to_poincare(p))
    assert np.allclose(back.as_array(), p.as_array(), rtol=1e-12, atol=1e-12)
    q = poincare_from_polar(r, a, z)
    assert np.allclose(to_poincare(p).as_array(), q.as_array(), rtol=1e-12, atol=1e-14)
