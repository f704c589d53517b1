# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import copy
import hashlib
import os.path as osp
from dataclasses import dataclass, field, fields, replace
from typing import Optional

import numpy as np

from bicruise.models import (PlatoonState, build_controller, build_platoon,
                             build_topology)
from bicruise.sim import DisturbanceSchedule, build_integrator
from bicruise.sim.monitors import DEFAULT_MONITORS
from bicruise.utils import (BicruiseError, Config, ConfigurationError,
                            ScenarioError)
from bicruise.utils.fileio import dump

DEFAULT_ANALYSIS = dict(g_frak=0.9,
                        convergence_tolerance=1e-3,
                        decay_tail_fraction=0.5,
                        decay_floor=1e-12)

SWEEP_AXES = ('mu', 'lambda', 'q', 'n', 'R', 'd')

_INTEGRATOR_KEYS = dict(RK4Fixed=('dt', 'dt_min'),
                        RK45Adaptive=('rtol', 'atol', 'dt_init', 'dt_min',
                                      'dt_max'))


def _floats(values):
    return [float(v) for v in np.asarray(values, dtype=np.float64).reshape(-1)]


def _plain(obj):
    """Nested dicts/lists with Python scalars only, so the result survives a
    YAML round trip unchanged."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def _number_tree(obj):
    # numeric leaves become floats; strings, bools and None stay as they are
    if isinstance(obj, dict):
        return {k: _number_tree(v) for k, v in obj.items()}
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, float)):
        return float(obj)
    return obj


@dataclass
class Scenario:
    """Everything needed to reproduce one run.

    Fields mirror the keys of a scenario file. ``initial_state`` holds
    ``spacings`` (``s_2..s_n``; on a ring ``s_1`` follows from the length)
    and ``speeds`` (``v_1..v_n``).
    """

    name: str
    topology: dict
    controller: dict
    initial_state: dict
    integrator: dict = field(default_factory=lambda: dict(type='RK45Adaptive'))
    t_end: float = 300.0
    sample_stride: float = 0.1
    disturbance: Optional[dict] = None
    monitors: dict = field(default_factory=dict)
    thresholds: dict = field(default_factory=dict)
    analysis: dict = field(default_factory=dict)
    notes: str = ''

    def __post_init__(self):
        self.name = str(self.name)
        self.topology = _number_tree(_plain(dict(self.topology)))
        self.controller = _number_tree(_plain(dict(self.controller)))
        self.initial_state = dict(
            spacings=_floats(self.initial_state['spacings']),
            speeds=_floats(self.initial_state['speeds']))
        self.integrator = _number_tree(_plain(dict(self.integrator)))
        self.t_end = float(self.t_end)
        self.sample_stride = float(self.sample_stride)
        if self.disturbance is not None:
            self.disturbance = _number_tree(_plain(dict(self.disturbance)))
        self.monitors = {str(k): bool(v) for k, v in (self.monitors or {}).items()}
        self.thresholds = _number_tree(_plain(dict(self.thresholds or {})))
        analysis = dict(DEFAULT_ANALYSIS)
        analysis.update(_plain(dict(self.analysis or {})))
        self.analysis = _number_tree(analysis)
        self.notes = str(self.notes or '')

    @classmethod
    def from_config(cls, cfg):
        """Build a scenario from a :class:`Config` or a plain dict.

        Keys starting with an underscore are helper variables of Python
        scenario files and are dropped.
        """
        if isinstance(cfg, Config):
            cfg = cfg.to_dict()
        cfg = {k: v for k, v in dict(cfg).items() if not k.startswith('_')}
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(cfg) - known)
        if unknown:
            raise ScenarioError('scenario-keys',
                                'unknown keys: {}'.format(', '.join(unknown)))
        missing = [k for k in ('name', 'topology', 'controller', 'initial_state')
                   if k not in cfg]
        if missing:
            raise ScenarioError('scenario-keys',
                                'missing keys: {}'.format(', '.join(missing)))
        try:
            return cls(**copy.deepcopy(cfg))
        except (KeyError, TypeError, ValueError) as e:
            raise ScenarioError('scenario-keys', str(e))

    def to_dict(self):
        return _plain(dict(name=self.name,
                           topology=self.topology,
                           controller=self.controller,
                           initial_state=self.initial_state,
                           integrator=self.integrator,
                           t_end=self.t_end,
                           sample_stride=self.sample_stride,
                           disturbance=self.disturbance,
                           monitors=self.monitors,
                           thresholds=self.thresholds,
                           analysis=self.analysis,
                           notes=self.notes))

    @property
    def hash(self):
        text = dump(self.to_dict(), file_format='json', sort_keys=True)
        return hashlib.sha256(text.encode('utf-8')).hexdigest()[:16]

    @property
    def n(self):
        return len(self.initial_state['speeds'])

    def build_topology(self):
        return build_topology(copy.deepcopy(self.topology))

    def build_controller(self):
        return build_controller(copy.deepcopy(self.controller))

    def build_disturbance(self, controller=None):
        if not self.disturbance:
            return None
        controller = controller or self.build_controller()
        return DisturbanceSchedule.from_saturation(self.disturbance['amplitude'],
                                                   controller.saturation)

    def build_platoon(self):
        controller = self.build_controller()
        return build_platoon(self.build_topology(), controller, self.n,
                             self.build_disturbance(controller))

    def build_integrator(self):
        return build_integrator(copy.deepcopy(self.integrator))

    def initial_platoon_state(self):
        return PlatoonState(self.initial_state['spacings'],
                            self.initial_state['speeds'])

    def validate(self):
        """Check every scenario invariant; raise :class:`ScenarioError`
        naming the first one violated."""
        n = self.n
        if n < 2:
            raise ScenarioError('vehicle-count', 'need at least 2 vehicles')
        if len(self.initial_state['spacings']) != n - 1:
            raise ScenarioError(
                'spacing-count', 'expected {} spacings for {} vehicles, got {}'.format(
                    n - 1, n, len(self.initial_state['spacings'])))
        try:
            topology = self.build_topology()
            controller = self.build_controller()
        except (ConfigurationError, KeyError, TypeError) as e:
            raise ScenarioError('parameters', str(e))
        try:
            topology.validate(n, controller.potential)
        except ConfigurationError as e:
            raise ScenarioError('ring-length', str(e))
        try:
            topology.check_state(self.initial_platoon_state(),
                                 controller.potential, controller.v_max)
        except BicruiseError as e:
            raise ScenarioError('state-space', str(e))
        try:
            schedule = self.build_disturbance(controller)
        except (ConfigurationError, KeyError, TypeError) as e:
            raise ScenarioError('disturbance-amplitude', str(e))
        if schedule is not None and not topology.contains(
                PlatoonState(self.initial_state['spacings'], np.concatenate(
                    [[schedule.signal(0.0)], self.initial_state['speeds'][1:]])),
                controller.potential, controller.v_max):
            raise ScenarioError('state-space',
                                'initial state leaves the state space under '
                                'the prescribed leader speed')
        try:
            self.build_integrator()
        except (ConfigurationError, KeyError, TypeError) as e:
            raise ScenarioError('integrator', str(e))
        if not self.t_end > 0:
            raise ScenarioError('t-end', 't_end must be positive')
        if not 0 < self.sample_stride <= self.t_end:
            raise ScenarioError('sample-stride',
                                'sample_stride must lie in (0, t_end]')
        if not 0 < self.analysis['g_frak'] < 1:
            raise ScenarioError('g-frak', 'g_frak must lie in (0, 1)')
        unknown = sorted(set(self.monitors) - set(DEFAULT_MONITORS))
        if unknown:
            raise ScenarioError('monitors', 'unknown monitors: {}'.format(
                ', '.join(unknown)))
        for metric, bounds in self.thresholds.items():
            if not isinstance(bounds, dict):
                raise ScenarioError(
                    'thresholds', 'bounds for {} must be a mapping'.format(metric))
        return self

    def with_overrides(self, t_end=None, sample_stride=None, method=None,
                       rtol=None, atol=None):
        """Copy with CLI-level overrides applied."""
        integrator = dict(self.integrator)
        if method is not None and method != integrator.get('type'):
            keep = _INTEGRATOR_KEYS.get(method, ())
            integrator = {k: v for k, v in integrator.items() if k in keep}
            integrator['type'] = method
        if rtol is not None:
            integrator['rtol'] = float(rtol)
        if atol is not None:
            integrator['atol'] = float(atol)
        return replace(self,
                       integrator=integrator,
                       t_end=self.t_end if t_end is None else t_end,
                       sample_stride=self.sample_stride
                       if sample_stride is None else sample_stride)

    def with_parameter(self, axis, value):
        """Copy with one swept parameter changed.

        ``n`` keeps the mean spacing: the ring length scales with ``n`` and
        the initial spacing deviations and speeds are repeated cyclically.
        """
        if axis not in SWEEP_AXES:
            raise ScenarioError('sweep-axis', 'axis must be one of {}, got {}'.format(
                ', '.join(SWEEP_AXES), axis))
        controller = copy.deepcopy(self.controller)
        topology = copy.deepcopy(self.topology)
        disturbance = copy.deepcopy(self.disturbance)
        initial_state = copy.deepcopy(self.initial_state)
        if axis == 'mu':
            controller['mu'] = float(value)
        elif axis == 'lambda':
            controller['potential']['interaction_distance'] = float(value)
        elif axis == 'q':
            controller['potential']['q'] = float(value)
        elif axis == 'R':
            if topology.get('type') != 'RingRoad':
                raise ScenarioError('sweep-axis', 'R applies to ring roads only')
            topology['length'] = float(value)
        elif axis == 'd':
            if not disturbance:
                raise ScenarioError('sweep-axis',
                                    'd applies to scenarios with a disturbance')
            disturbance['amplitude'] = float(value)
        elif axis == 'n':
            initial_state = self._resized_state(int(value), topology)
        return replace(self,
                       name='{}[{}={}]'.format(self.name, axis, value),
                       controller=controller,
                       topology=topology,
                       disturbance=disturbance,
                       initial_state=initial_state)

    def _resized_state(self, n, topology):
        if n < 2:
            raise ScenarioError('vehicle-count', 'need at least 2 vehicles')
        spacings = np.asarray(self.initial_state['spacings'])
        speeds = np.resize(np.asarray(self.initial_state['speeds']), n)
        if topology.get('type') == 'RingRoad':
            length = topology['length']
            full = np.concatenate([[length - spacings.sum()], spacings])
            mean = length / full.size
            topology['length'] = mean * n
            new_spacings = mean + np.resize(full - mean, n)[1:]
        else:
            new_spacings = np.resize(spacings, n - 1)
        return dict(spacings=_floats(new_spacings), speeds=_floats(speeds))


def load_scenario(filename):
    """Load a scenario from a ``.py``, ``.yaml``/``.yml`` or ``.json`` file."""
    return Scenario.from_config(Config.fromfile(filename))


def dump_scenario(scenario, filename=None):
    """Write a scenario as YAML; return the text when ``filename`` is None."""
    if filename is not None and not filename.endswith(('.yaml', '.yml')):
        filename = osp.splitext(filename)[0] + '.yaml'
    return dump(scenario.to_dict(), filename, file_format='yaml')
