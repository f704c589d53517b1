# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import dataclasses
import os.path as osp

import numpy as np
import pytest

from bicruise.apis import (SWEEP_AXES, Scenario, dump_scenario, load_scenario,
                           preset)
from bicruise.utils import ScenarioError


def _invariant(scenario):
    with pytest.raises(ScenarioError) as excinfo:
        scenario.validate()
    return excinfo.value.invariant


def test_yaml_round_trip(tmp_path):
    scenario = preset('ring-point')
    filename = str(tmp_path / 'scenario.yaml')
    dump_scenario(scenario, filename)
    loaded = load_scenario(filename)
    assert loaded == scenario
    assert loaded.hash == scenario.hash
    assert len(scenario.hash) == 16


def test_dump_forces_yaml_suffix(tmp_path):
    dump_scenario(preset('ring-point'), str(tmp_path / 'scenario.txt'))
    assert osp.isfile(str(tmp_path / 'scenario.yaml'))
    text = dump_scenario(preset('ring-point'))
    assert 'ring-point' in text


def test_hash_tracks_content():
    scenario = preset('ring-point')
    assert scenario.with_overrides(t_end=300.0).hash == scenario.hash
    assert scenario.with_overrides(t_end=10.0).hash != scenario.hash
    assert scenario.with_parameter('mu', 0.2).hash != scenario.hash


def test_from_config_keys():
    cfg = preset('ring-point').to_dict()
    cfg['_helper'] = 1.0
    assert Scenario.from_config(cfg) == preset('ring-point')
    cfg['colour'] = 'red'
    with pytest.raises(ScenarioError) as excinfo:
        Scenario.from_config(cfg)
    assert excinfo.value.invariant == 'scenario-keys'
    with pytest.raises(ScenarioError):
        Scenario.from_config(dict(name='x'))


def test_defaults():
    scenario = preset('ring-point')
    assert scenario.n == 4
    assert scenario.analysis['g_frak'] == 0.9
    assert scenario.integrator['type'] == 'RK45Adaptive'
    assert scenario.disturbance is None
    np.testing.assert_array_equal(scenario.initial_platoon_state().spacings,
                                  [33.0, 32.0, 27.0])


def test_validation_invariants():
    base = preset('ring-point')
    assert base.validate() is base
    cases = [
        (dict(initial_state=dict(spacings=[], speeds=[30.0])), 'vehicle-count'),
        (dict(initial_state=dict(spacings=[33.0, 32.0],
                                 speeds=[31.0, 28.0, 27.0, 30.0])), 'spacing-count'),
        (dict(topology=dict(type='RingRoad', length=20.0),
              initial_state=dict(spacings=[5.5, 5.5, 5.5],
                                 speeds=[30.0] * 4)), 'ring-length'),
        (dict(initial_state=dict(spacings=[33.0, 32.0, 27.0],
                                 speeds=[31.0, 28.0, 27.0, 35.0])), 'state-space'),
        (dict(initial_state=dict(spacings=[33.0, 32.0, 62.0],
                                 speeds=[31.0, 28.0, 27.0, 30.0])), 'state-space'),
        (dict(integrator=dict(type='Euler')), 'integrator'),
        (dict(integrator=dict(type='RK4Fixed', dt=-1.0)), 'integrator'),
        (dict(t_end=0.0), 't-end'),
        (dict(sample_stride=400.0), 'sample-stride'),
        (dict(analysis=dict(g_frak=1.0)), 'g-frak'),
        (dict(monitors=dict(headway=False)), 'monitors'),
        (dict(thresholds=dict(H_end=1.0)), 'thresholds'),
    ]
    for changes, invariant in cases:
        assert _invariant(dataclasses.replace(base, **changes)) == invariant


def test_parameter_validation():
    base = preset('ring-point')
    controller = dict(base.controller, mu=-0.1)
    assert _invariant(dataclasses.replace(base, controller=controller)) == 'parameters'


def test_disturbance_amplitude():
    base = preset('string-stability')
    assert base.validate() is base
    too_large = dataclasses.replace(base, disturbance=dict(amplitude=15.0))
    assert _invariant(too_large) == 'disturbance-amplitude'


def test_with_overrides():
    scenario = preset('ring-point').with_overrides(t_end=5.0, sample_stride=0.5,
                                                   rtol=1e-6)
    assert scenario.t_end == 5.0 and scenario.sample_stride == 0.5
    assert scenario.integrator['rtol'] == 1e-6
    fixed = scenario.with_overrides(method='RK4Fixed')
    assert fixed.integrator == dict(type='RK4Fixed', dt_min=1e-10)
    assert fixed.validate() is fixed
    assert fixed.build_integrator().dt == 1e-3


def test_with_parameter():
    base = preset('ring-point')
    assert base.with_parameter('mu', 0.3).controller['mu'] == 0.3
    assert base.with_parameter('lambda', 45.0).controller['potential'][
        'interaction_distance'] == 45.0
    assert base.with_parameter('q', 0.2).controller['potential']['q'] == 0.2
    assert base.with_parameter('R', 140.0).topology['length'] == 140.0
    assert base.with_parameter('mu', 0.3).name == 'ring-point[mu=0.3]'
    with pytest.raises(ScenarioError):
        base.with_parameter('d', 10.0)
    with pytest.raises(ScenarioError):
        base.with_parameter('speed', 1.0)
    with pytest.raises(ScenarioError):
        preset('prop3-regime').with_parameter('R', 140.0)
    assert preset('string-stability').with_parameter(
        'd', 10.0).disturbance['amplitude'] == 10.0
    assert set(SWEEP_AXES) == {'mu', 'lambda', 'q', 'n', 'R', 'd'}


def test_with_parameter_n_keeps_mean_spacing():
    scenario = preset('ring-point').with_parameter('n', 8)
    assert scenario.n == 8
    assert scenario.topology['length'] == 260.0
    np.testing.assert_allclose(scenario.initial_state['spacings'],
                               [33.0, 32.0, 27.0, 38.0, 33.0, 32.0, 27.0])
    np.testing.assert_allclose(scenario.initial_state['speeds'],
                               [31.0, 28.0, 27.0, 30.0] * 2)
    s1 = scenario.topology['length'] - sum(scenario.initial_state['spacings'])
    assert s1 == pytest.approx(38.0)
    assert scenario.validate() is scenario
    open_road = preset('prop3-regime').with_parameter('n', 3)
    assert open_road.initial_state['spacings'] == [90.0, 90.0]
    assert open_road.initial_state['speeds'] == [31.0, 29.0, 30.5]
    with pytest.raises(ScenarioError):
        preset('ring-point').with_parameter('n', 1)
