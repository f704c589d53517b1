# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import numpy as np
import pytest

from bicruise.core.evaluation import (convergence_time, disturbance_peaks,
                                      evaluate_thresholds, fit_decay_above_floor,
                                      fit_decay_rate, print_threshold_summary)
from bicruise.sim import DisturbanceSchedule
from bicruise.utils import ArgumentError, ConfigurationError


def test_decay_rate_of_exponential():
    t = np.linspace(0.0, 50.0, 501)
    fit = fit_decay_rate(t, 3.0 * np.exp(-0.3 * t))
    assert fit.slope == pytest.approx(-0.3, rel=1e-9)
    assert fit.intercept == pytest.approx(np.log(3.0), rel=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    assert fit.num_points == 251


def test_decay_rate_uses_tail_only():
    t = np.linspace(0.0, 20.0, 201)
    values = np.where(t < 10.0, np.exp(-2.0 * t), np.exp(-20.0) * np.exp(-0.5 * (t - 10.0)))
    assert fit_decay_rate(t, values, tail_fraction=0.4).slope == pytest.approx(-0.5, rel=1e-9)


def test_constant_series():
    t = np.linspace(0.0, 1.0, 20)
    fit = fit_decay_rate(t, np.full(20, 2.0))
    assert fit.slope == 0.0
    assert fit.r_squared == 1.0


def test_decay_above_floor_skips_rounding_noise():
    t = np.linspace(0.0, 60.0, 601)
    values = np.exp(-t)
    values[t > 25.0] = 1e-16 * (1 + np.sin(t[t > 25.0]))
    fit = fit_decay_above_floor(t, values, floor=1e-10)
    assert fit.slope == pytest.approx(-1.0, rel=1e-9)


@pytest.mark.parametrize('values,kwargs', [
    (np.zeros(30), {}),
    (np.ones(29), {}),
    (np.ones(30), dict(tail_fraction=0.0)),
    (np.ones(30), dict(min_points=40)),
])
def test_decay_rate_errors(values, kwargs):
    t = np.linspace(0.0, 1.0, 30)
    with pytest.raises(ArgumentError):
        fit_decay_rate(t, values, **kwargs)


def test_convergence_time_stays_within():
    t = np.arange(10.0)
    dev = np.array([5, 0.5, 2, 0.5, 0.1, 0.1, 0.05, 0.01, 0.0, 0.0])
    assert convergence_time(t, dev, 1.0) == 3.0
    assert convergence_time(t, dev, 10.0) == 0.0
    assert convergence_time(t, dev, 0.01) == 7.0
    dev[-1] = 2.0
    assert convergence_time(t, dev, 1.0) is None


def _schedule():
    return DisturbanceSchedule(14.0, 20.0, 35.0)


def test_disturbance_peaks_windows_and_orders():
    t = np.linspace(0.0, 10.0, 1001)
    n = 4
    speeds = np.full((t.size, n), 20.0)
    decel = (t >= np.pi / 2) & (t < np.pi)
    accel = (t >= np.pi) & (t < 2.0 * np.pi)
    speeds[decel, 1] = 20.0 - 6.0
    speeds[decel, 2] = 20.0 - 3.0
    speeds[decel, 3] = 20.0 - 1.0
    speeds[accel, 3] = 20.0 + 5.0
    speeds[accel, 2] = 20.0 + 4.0
    speeds[accel, 1] = 20.0 + 4.5
    # the tail of the disturbance window is in neither phase
    speeds[(t >= 2.0 * np.pi) & (t < 2.5 * np.pi), 1] = 0.5
    speeds[t > 9.0, 1] = 0.5
    peaks = disturbance_peaks(t, speeds, _schedule())
    assert list(peaks.windows) == ['deceleration', 'acceleration']
    assert peaks.windows['acceleration'] == (np.pi, 2.0 * np.pi)
    assert peaks.orders['deceleration'] == [2, 3, 4]
    assert peaks.orders['acceleration'] == [4, 3, 2]
    np.testing.assert_allclose(peaks.ordered_peaks('deceleration'), [6.0, 3.0, 1.0])
    np.testing.assert_allclose(peaks.ordered_peaks('acceleration'), [5.0, 4.0, 4.5])
    assert peaks.is_nonincreasing('deceleration')
    assert not peaks.is_nonincreasing('acceleration')
    assert peaks.max_follower_peak() == pytest.approx(6.0)


def test_ordering_flags_as_thresholds():
    metrics = dict(deceleration_peaks_nonincreasing=True,
                   acceleration_peaks_nonincreasing=False)
    bounds = {name: dict(min=True) for name in metrics}
    results = evaluate_thresholds(metrics, bounds)
    assert [r.passed for r in results] == [True, False]
    assert results[1].bound == '>= True'


def test_thresholds():
    metrics = dict(a=1.0, b=2.0, c=None, d=float('nan'))
    results = evaluate_thresholds(metrics, dict(a=dict(max=1.0, below=1.5),
                                                b=dict(min=2.0, above=2.0),
                                                c=dict(max=1.0),
                                                d=dict(max=1.0),
                                                e=dict(min=0.0)))
    passed = {(r.metric, r.bound): r.passed for r in results}
    assert passed[('a', '<= 1.0')]
    assert passed[('a', '< 1.5')]
    assert passed[('b', '>= 2.0')]
    assert not passed[('b', '> 2.0')]
    assert not passed[('c', '<= 1.0')]
    assert not passed[('d', '<= 1.0')]
    assert not passed[('e', '>= 0.0')]


def test_threshold_errors():
    with pytest.raises(ConfigurationError):
        evaluate_thresholds(dict(a=1.0), dict(a=dict(equals=1.0)))
    with pytest.raises(ConfigurationError):
        evaluate_thresholds(dict(a=1.0), dict(a=1.0))


def test_threshold_summary(capsys):
    results = evaluate_thresholds(dict(speed_error=2e-4), dict(speed_error=dict(max=1e-3)))
    print_threshold_summary(results)
    out = capsys.readouterr().out
    assert 'speed_error' in out and 'PASS' in out
    print_threshold_summary(results, logger='silent')
    assert capsys.readouterr().out == ''
