# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import os.path as osp

import pytest

from bicruise.apis.presets import PRESET_DIR
from bicruise.utils import Config


def _write(path, text):
    path.write_text(text)
    return str(path)


def test_attribute_access():
    cfg = Config(dict(controller=dict(mu=0.1, potential=dict(q=0.1))))
    assert cfg.controller.mu == 0.1
    assert cfg['controller']['potential']['q'] == 0.1
    assert 'controller' in cfg and len(cfg) == 1
    with pytest.raises(AttributeError):
        cfg.topology
    cfg.topology = dict(type='OpenRoad')
    assert cfg.topology.type == 'OpenRoad'
    assert cfg.to_dict() == dict(controller=dict(mu=0.1, potential=dict(q=0.1)),
                                 topology=dict(type='OpenRoad'))
    with pytest.raises(TypeError):
        Config([1, 2])


def test_preset_inherits_bases():
    cfg = Config.fromfile(osp.join(PRESET_DIR, 'ring_point.py'))
    assert cfg.name == 'ring-point'
    # the child only sets lambda; the rest of the potential comes from the base
    assert cfg.controller.potential.interaction_distance == 40.0
    assert cfg.controller.potential.q == 0.1
    assert cfg.integrator.type == 'RK45Adaptive'
    assert 'base_files' not in cfg
    assert 'ring_road.py' in cfg.text


def test_python_helpers_are_kept(tmp_path):
    filename = _write(tmp_path / 'helpers.py', '_n = 3\nspeeds = [30.0] * _n\n')
    cfg = Config.fromfile(filename)
    assert cfg.speeds == [30.0, 30.0, 30.0]
    assert cfg._n == 3


def test_overwrite_replaces_base_dict(tmp_path):
    _write(tmp_path / 'base.py', "controller = dict(type='A', mu=0.1, extra=1)\n")
    merged = _write(tmp_path / 'merged.py',
                    "base_files = ['base.py']\ncontroller = dict(mu=0.2)\n")
    replaced = _write(
        tmp_path / 'replaced.py',
        "base_files = ['base.py']\ncontroller = dict(_overwrite_=True, type='B')\n")
    assert Config.fromfile(merged).controller.to_dict() == dict(type='A', mu=0.2,
                                                                extra=1)
    assert Config.fromfile(replaced).controller.to_dict() == dict(type='B')


def test_yaml_with_bases(tmp_path):
    _write(tmp_path / 'base.yaml', 'topology:\n  type: RingRoad\n  length: 130.0\n')
    child = _write(tmp_path / 'child.yaml',
                   'base_files: base.yaml\ntopology:\n  length: 140.0\n')
    cfg = Config.fromfile(child)
    assert cfg.topology.to_dict() == dict(type='RingRoad', length=140.0)


def test_duplicate_base_keys(tmp_path):
    _write(tmp_path / 'a.py', 't_end = 1.0\n')
    _write(tmp_path / 'b.py', 't_end = 2.0\n')
    child = _write(tmp_path / 'child.py', "base_files = ['a.py', 'b.py']\n")
    with pytest.raises(KeyError):
        Config.fromfile(child)


def test_merge_type_conflict(tmp_path):
    _write(tmp_path / 'base.py', 'analysis = 1.0\n')
    child = _write(tmp_path / 'child.py',
                   "base_files = ['base.py']\nanalysis = dict(g_frak=0.9)\n")
    with pytest.raises(TypeError):
        Config.fromfile(child)


def test_bad_files(tmp_path):
    with pytest.raises(SyntaxError):
        Config.fromfile(_write(tmp_path / 'broken.py', 'controller = dict(\n'))
    with pytest.raises(IOError):
        Config.fromfile(_write(tmp_path / 'scenario.txt', 'name: x\n'))
    with pytest.raises(FileNotFoundError):
        Config.fromfile(str(tmp_path / 'missing.yaml'))
    with pytest.raises(TypeError):
        Config.fromfile(_write(tmp_path / 'list.yaml', '- 1\n- 2\n'))
