# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import dataclasses

import numpy as np
import pytest

from bicruise.apis import preset
from bicruise.sim import integrate, run_monitors
from .conftest import random_open_state, random_ring_state

RUNS = 100


def _with_state(scenario, state):
    return dataclasses.replace(
        scenario,
        initial_state=dict(spacings=state.spacings.tolist(),
                           speeds=state.speeds.tolist()),
        t_end=10.0,
        sample_stride=0.5).validate()


def _check(scenario, names):
    traj = integrate(scenario)
    assert traj.completed, scenario.initial_state
    report = run_monitors(traj, scenario)
    for name in names:
        assert report[name].applicable and report[name].passed, (
            name, scenario.initial_state)


@pytest.mark.slow
@pytest.mark.parametrize('name', ['ring-point', 'ring-continuum'])
def test_random_ring_runs_stay_in_state_space(name):
    rng = np.random.default_rng(7)
    base = preset(name)
    for _ in range(RUNS):
        _check(_with_state(base, random_ring_state(rng)),
               ['spacing', 'speed', 'ring_length', 'lyapunov'])


@pytest.mark.slow
def test_random_open_road_runs_respect_ceiling():
    rng = np.random.default_rng(11)
    base = preset('open-road-compare-48')
    for _ in range(RUNS):
        _check(_with_state(base, random_open_state(rng)),
               ['spacing', 'speed', 'spacing_ceiling', 'lyapunov'])
