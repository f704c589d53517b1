# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import pytest

from bicruise.apis import list_presets, preset, resolve_scenario
from bicruise.core.lyapunov import prop3_check
from bicruise.models import BaselineCruise, BidirectionalCruise
from bicruise.utils import ScenarioError

PRESETS = [
    'open-road-compare-48', 'open-road-compare-73', 'prop3-regime',
    'ring-continuum', 'ring-point', 'string-stability'
]


def test_list_presets():
    assert list_presets() == PRESETS


@pytest.mark.parametrize('name', PRESETS)
def test_presets_validate(name):
    scenario = preset(name)
    assert scenario.name == name
    assert scenario.validate() is scenario
    assert scenario.thresholds
    assert scenario.notes


def test_ring_presets():
    point = preset('ring-point')
    continuum = preset('ring-continuum')
    for scenario in (point, continuum):
        assert scenario.topology == dict(type='RingRoad', length=130.0)
        assert scenario.controller['mu'] == 0.1
        assert scenario.controller['potential']['q'] == 0.1
        assert scenario.t_end == 300.0
    # R < n lambda for the point, R >= n lambda for the continuum
    assert point.controller['potential']['interaction_distance'] == 40.0
    assert continuum.controller['potential']['interaction_distance'] == 30.0
    s1 = 130.0 - sum(point.initial_state['spacings'])
    assert s1 == 38.0


def test_open_road_presets():
    bidirectional = preset('open-road-compare-48')
    baseline = preset('open-road-compare-73')
    assert bidirectional.controller['potential']['q'] == pytest.approx(35.0**-3)
    assert bidirectional.initial_state == baseline.initial_state
    assert isinstance(bidirectional.build_controller(), BidirectionalCruise)
    controller = baseline.build_controller()
    assert isinstance(controller, BaselineCruise)
    assert baseline.controller['mu_tilde'] == 0.1
    assert baseline.controller['epsilon'] == 0.1
    assert bidirectional.thresholds['max_abs_accel'] == dict(
        below='open-road-compare-73')


def test_string_stability_preset():
    scenario = preset('string-stability')
    assert scenario.n == 6
    assert scenario.disturbance == dict(amplitude=14.0)
    assert scenario.controller['saturation']['v_star'] == 20.0
    assert scenario.initial_state['speeds'] == [20.0] * 6
    assert scenario.build_disturbance().signal(0.0) == 20.0
    for phase in ('deceleration', 'acceleration'):
        bound = scenario.thresholds['{}_peaks_nonincreasing'.format(phase)]
        assert bound == dict(min=True)


def test_regime_preset_premise_holds():
    scenario = preset('prop3-regime')
    regime = prop3_check(scenario.initial_platoon_state(), scenario.build_controller())
    assert regime.premise_holds
    assert regime.gamma == pytest.approx(1.0 / 7.0)
    assert regime.required_spacing == pytest.approx(85.0)


def test_unknown_preset():
    with pytest.raises(ScenarioError) as excinfo:
        preset('ring-road')
    assert excinfo.value.invariant == 'preset-name'
    with pytest.raises(ScenarioError) as excinfo:
        resolve_scenario('no/such/file.yaml')
    assert excinfo.value.invariant == 'scenario-source'


def test_resolve_scenario(tmp_path):
    scenario = preset('ring-point')
    assert resolve_scenario(scenario) is scenario
    assert resolve_scenario('ring-point') == scenario
