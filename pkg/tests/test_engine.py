# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import os.path as osp

import numpy as np
import pytest

from bicruise.apis import preset
from bicruise.models import OpenRoad, Platoon, PlatoonState
from bicruise.sim import (RK4Fixed, RK45Adaptive, Simulator, TerminationReason,
                          integrate, sample_grid)
from bicruise.sim.hooks import (Hook, Priority, SimLoggerHook, StepStatsHook,
                                 get_priority)
from bicruise.utils import scandir
from .conftest import make_controller


class CountingHook(Hook):

    def __init__(self):
        self.counts = dict(before_run=0, after_run=0, after_step=0, after_reject=0,
                           after_sample=0)

    def before_run(self, runner):
        self.counts['before_run'] += 1

    def after_run(self, runner):
        self.counts['after_run'] += 1

    def after_step(self, runner):
        self.counts['after_step'] += 1

    def after_reject(self, runner):
        self.counts['after_reject'] += 1

    def after_sample(self, runner):
        self.counts['after_sample'] += 1


def test_sample_grid():
    np.testing.assert_allclose(sample_grid(1.0, 0.3), [0.0, 0.3, 0.6, 0.9, 1.0])
    np.testing.assert_allclose(sample_grid(1.0, 0.25), [0.0, 0.25, 0.5, 0.75, 1.0])
    grid = sample_grid(300.0, 0.1)
    assert grid.size == 3001 and grid[-1] == 300.0


def test_ring_point_short_run(short_ring_point):
    traj = integrate(short_ring_point)
    assert traj.completed
    assert traj.termination is TerminationReason.COMPLETED
    np.testing.assert_allclose(traj.t, sample_grid(5.0, 0.1))
    assert traj.spacings.shape == (traj.t.size, 3)
    assert traj.speeds.shape == (traj.t.size, 4)
    # H never increases beyond the integration tolerance
    assert np.all(np.diff(traj.H) <= 1e-8)
    np.testing.assert_allclose(traj.ring_spacing + traj.spacings.sum(axis=1), 130.0,
                               atol=1e-9)
    assert traj.U is not None and traj.hdot is not None
    assert np.all(traj.hdot <= 1e-9)
    assert traj.stats['accepted'] > 0
    assert traj.stats['rhs_evals'] > traj.stats['accepted']
    np.testing.assert_array_equal(traj.t[0], 0.0)
    np.testing.assert_array_equal(traj.spacings[0], [33.0, 32.0, 27.0])


def test_hdot_matches_slope_of_sampled_H(ring_point_scenario):
    scenario = ring_point_scenario.with_overrides(t_end=2.0, sample_stride=1e-3)
    traj = integrate(scenario)
    assert traj.completed
    slope = np.gradient(traj.H, traj.t)
    scale = np.max(np.abs(traj.hdot))
    assert scale > 0
    # end points use one-sided differences
    np.testing.assert_allclose(slope[1:-1], traj.hdot[1:-1], rtol=1e-3,
                               atol=1e-3 * scale)


def test_equilibrium_run_is_constant(ring, point_controller):
    platoon = Platoon(ring, point_controller, 4)
    sim = Simulator(platoon, RK45Adaptive(), 3.0, 0.5)
    traj = sim.run(PlatoonState(np.full(3, 32.5), np.full(4, 30.0)).as_vector())
    assert traj.completed
    np.testing.assert_allclose(traj.spacings, 32.5, atol=1e-9)
    np.testing.assert_allclose(traj.speeds, 30.0, atol=1e-9)
    np.testing.assert_allclose(traj.accels, 0.0, atol=1e-9)


def test_hooks_are_called(ring, point_controller):
    platoon = Platoon(ring, point_controller, 4)
    sim = Simulator(platoon, RK4Fixed(dt=0.01), 0.5, 0.1)
    hook = CountingHook()
    sim.register_hook(hook)
    traj = sim.run(PlatoonState([33.0, 32.0, 27.0], [31.0, 28.0, 27.0, 30.0]).as_vector())
    assert hook.counts['before_run'] == 1
    assert hook.counts['after_run'] == 1
    assert hook.counts['after_step'] == sim.step == 50
    # includes the t = 0 sample
    assert hook.counts['after_sample'] == len(traj) == 6
    with pytest.raises(ValueError):
        sim.register_hook(hook)


def test_hook_order_follows_priority(ring, point_controller):
    platoon = Platoon(ring, point_controller, 4)
    sim = Simulator(platoon, RK4Fixed(dt=0.01), 0.5, 0.1)
    sim.register_logger_hooks()
    user = CountingHook()
    sim.register_hook(user)
    kinds = [type(h) for h in sim.hooks]
    assert kinds == [StepStatsHook, CountingHook, SimLoggerHook]
    assert [h.priority for h in sim.hooks] == [30, 50, 90]
    early = CountingHook()
    sim.register_hook(early, priority=0)
    assert sim.hooks[0] is early


def test_get_priority():
    assert [p.name for p in Priority] == ['HIGH', 'NORMAL', 'VERY_LOW']
    assert get_priority('high') == 30
    assert get_priority(Priority.VERY_LOW) == 90
    assert get_priority(70) == 70
    with pytest.raises(ValueError):
        get_priority('LOWEST')
    with pytest.raises(ValueError):
        get_priority(101)
    with pytest.raises(TypeError):
        get_priority(0.5)


def test_state_space_violation_stops_run():
    ctrl = make_controller(lam=35.0, q=35.0**-3)
    platoon = Platoon(OpenRoad(), ctrl, 2)
    # the follower closes a 6 m gap at 33 m/s; no step of 0.625 s or more
    # stays in the state space
    sim = Simulator(platoon, RK4Fixed(dt=5.0, dt_min=1.0), 10.0, 1.0)
    traj = sim.run(np.array([6.0, 1.0, 34.0]))
    assert not traj.completed
    assert traj.termination is TerminationReason.STATE_SPACE_VIOLATION
    assert traj.termination_time == 0.0
    assert len(traj) == 1
    assert traj.stats['rejected'] == 3


def test_disturbed_leader_is_recorded():
    scenario = preset('string-stability').with_overrides(t_end=8.0, sample_stride=0.05)
    traj = integrate(scenario)
    assert traj.completed
    expected = 20.0 + 14.0 * np.cos(traj.t)
    window = (traj.t >= np.pi / 2) & (traj.t < 2.5 * np.pi)
    np.testing.assert_allclose(traj.speeds[window, 0], expected[window], atol=1e-12)
    np.testing.assert_allclose(traj.speeds[~window, 0], 20.0, atol=1e-12)
    np.testing.assert_allclose(traj.accels[window, 0], -14.0 * np.sin(traj.t[window]),
                               atol=1e-12)
    # the Lyapunov function is not monitored, the disturbance injects energy
    assert traj.H.max() > traj.H[0]


def test_json_log_is_written(tmp_path, short_ring_point):
    traj = integrate(short_ring_point, work_dir=str(tmp_path), log_interval=20)
    assert traj.completed
    logs = list(scandir(str(tmp_path), '.log.json'))
    assert len(logs) == 1
    with open(osp.join(str(tmp_path), logs[0])) as f:
        lines = [line for line in f if line.strip()]
    assert len(lines) >= 2
