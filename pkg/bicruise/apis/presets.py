# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import os.path as osp

from bicruise.utils import ScenarioError, scandir
from .scenario import Scenario, load_scenario

PRESET_DIR = osp.join(osp.dirname(osp.dirname(osp.abspath(__file__))),
                      'presets')


def _preset_file(name):
    return osp.join(PRESET_DIR, name.replace('-', '_') + '.py')


def list_presets():
    """Names of the built-in scenarios, sorted."""
    return sorted(
        osp.splitext(f)[0].replace('_', '-') for f in scandir(PRESET_DIR, '.py')
        if not f.startswith('_'))


def preset(name):
    """Load a built-in scenario by name, e.g. ``preset('ring-point')``."""
    if name not in list_presets():
        raise ScenarioError(
            'preset-name', 'unknown preset "{}", known presets: {}'.format(
                name, ', '.join(list_presets())))
    return load_scenario(_preset_file(name))


def resolve_scenario(source):
    """Accept a :class:`Scenario`, a scenario file path or a preset name."""
    if isinstance(source, Scenario):
        return source
    if osp.isfile(source):
        return load_scenario(source)
    if source in list_presets():
        return preset(source)
    raise ScenarioError(
        'scenario-source', '"{}" is neither a scenario file nor a preset '
        '(known presets: {})'.format(source, ', '.join(list_presets())))
