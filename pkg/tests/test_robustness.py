import numpy as np
import pytest

from h2r_solitons.robustness import axis_radius_sweep, reintegration_check


def test_axis_sweep_spread_is_small():
    sw = axis_radius_sweep(5.0)
    assert len(sw.slopes) == 3
    assert sw.spread < 1e-8
    assert sw.spread == pytest.approx(np.ptp(sw.slopes), abs=0)


@pytest.mark.parametrize("r_max", [0.5, 1.0])
def test_short_reintegration_is_consistent(r_max):
    # close to the axis the backward amplification e^{5 r} is mild
    res = reintegration_check(r_max)
    assert res.reached and res.event == "AXIS_REACHED"
    assert res.discrepancy < 1e-9


def test_backward_error_amplified_far_from_axis():
    assert reintegration_check(1.0).discrepancy < 1e-9
    assert reintegration_check(4.0).discrepancy > 1e-6


def test_long_reintegration_turns_around():
    res = reintegration_check(10.0)
    assert not res.reached
    assert res.discrepancy == float("inf")
    assert res.event == "HORIZONTAL_TANGENCY"
