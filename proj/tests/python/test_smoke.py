import math

import pytest

import zerostat


def test_trig_prediction_at_degree_three():
    assert zerostat.trig_expected("-3..3") == pytest.approx(4.0, abs=1e-12)
    assert zerostat.trig_prob("-3..3") == pytest.approx(2.0 / 3.0, abs=1e-12)


def test_box_system_prediction():
    assert zerostat.nd_expected("(-1,-1)..(1,1)") == pytest.approx(4 * math.pi / 3, rel=1e-12)


def test_integer_zeros_of_exponential_sum():
    r = zerostat.disk_zeros_count("0,6.283185307179586i", [-1, 1], 10.5)
    assert r["count"] == 21
    assert r["certified"]


def test_real_roots_of_cubic():
    # (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
    r = zerostat.real_roots_count([6, -7, 0, 1])
    assert r["count"] == 3 and r["certified"]


def test_slope_fit_exact_line():
    slope, intercept, residual = zerostat.slope_fit([5, 10, 15, 20], [11, 21, 31, 41])
    assert slope == pytest.approx(2.0)
    assert intercept == pytest.approx(1.0)
    assert residual == pytest.approx(0.0, abs=1e-12)


def test_pseudovolume_of_segment():
    value, err = zerostat.pseudovolume([[0j], [2j * math.pi]], angle_samples=20000, seed=1)
    assert abs(value - 2 * math.pi) <= 3 * err + 1e-9


def test_experiment_report_is_deterministic():
    a = zerostat.run_experiment("trig1d", trials=300, seed=5, spectrum="-3..3")
    b = zerostat.run_experiment("trig1d", trials=300, seed=5, spectrum="-3..3", workers=3)
    assert a == b
    assert a["verdict"] in ("pass", "fail")
    assert a["config"]["seed"] == 5


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        zerostat.trig_expected("-3..x")
