# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Invariant monitors evaluated over a finished trajectory.

Violations are reported as data. Every monitor computes a margin per sample
that is nonnegative while the invariant holds.
"""
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional

import numpy as np
from terminaltables import AsciiTable

from bicruise.core.lyapunov import prop2_bound, prop3_check
from bicruise.models import BidirectionalCruise
from bicruise.utils import Registry, print_log

MONITORS = Registry('monitor')


@dataclass
class MonitorResult:
    name: str
    applicable: bool = True
    worst_margin: Optional[float] = None
    first_violation: Optional[float] = None
    note: str = ''

    @property
    def passed(self):
        return not self.applicable or self.first_violation is None

    def to_dict(self):
        return dict(name=self.name, applicable=self.applicable,
                    passed=self.passed, worst_margin=self.worst_margin,
                    first_violation=self.first_violation, note=self.note)


class MonitorReport(object):

    def __init__(self, results):
        self.results = OrderedDict((r.name, r) for r in results)

    def __getitem__(self, name):
        return self.results[name]

    def __contains__(self, name):
        return name in self.results

    @property
    def passed(self):
        return all(r.passed for r in self.results.values())

    @property
    def failures(self):
        return [r.name for r in self.results.values() if not r.passed]

    def to_dict(self):
        return OrderedDict((k, r.to_dict()) for k, r in self.results.items())


class BaseMonitor(object):

    name = None
    # strict monitors guard open sets, so a zero margin is a violation
    strict = False

    def applies(self, scenario, controller, topology):
        return True

    def margins(self, trajectory, scenario, controller, topology):
        raise NotImplementedError

    def evaluate(self, trajectory, scenario, controller, topology):
        if not self.applies(scenario, controller, topology):
            return MonitorResult(self.name, applicable=False)
        t, margin = self.margins(trajectory, scenario, controller, topology)
        result = MonitorResult(self.name)
        if margin.size == 0:
            return result
        result.worst_margin = float(np.min(margin))
        ok = margin > 0 if self.strict else margin >= 0
        bad = np.nonzero(~ok)[0]
        if bad.size:
            result.first_violation = float(t[bad[0]])
        return result


def _undisturbed_bidirectional(scenario, controller):
    return isinstance(controller, BidirectionalCruise) and not scenario.disturbance


@MONITORS.register_module()
class SpacingMonitor(BaseMonitor):
    """Every spacing, ``s_1`` included on a ring, stays above ``L``."""

    name = 'spacing'
    strict = True

    def margins(self, trajectory, scenario, controller, topology):
        return trajectory.t, trajectory.min_spacing - controller.potential.safety_distance


@MONITORS.register_module()
class SpeedMonitor(BaseMonitor):
    """Every speed stays inside ``(0, v_max)``."""

    name = 'speed'
    strict = True

    def margins(self, trajectory, scenario, controller, topology):
        v = trajectory.speeds
        return trajectory.t, np.minimum(v, controller.v_max - v).min(axis=1)


@MONITORS.register_module()
class LyapunovMonitor(BaseMonitor):
    """H never increases between consecutive samples beyond
    ``max(1e-8, 10 rtol H)``."""

    name = 'lyapunov'

    def applies(self, scenario, controller, topology):
        return _undisturbed_bidirectional(scenario, controller)

    def margins(self, trajectory, scenario, controller, topology):
        rtol = scenario.integrator.get('rtol', 1e-8)
        H = trajectory.H
        tol = np.maximum(1e-8, 10.0 * rtol * H[:-1])
        return trajectory.t[1:], tol - np.diff(H)


@MONITORS.register_module()
class SpacingCeilingMonitor(BaseMonitor):
    """Open-road spacings stay below the ceiling computed from the initial
    Lyapunov value."""

    name = 'spacing_ceiling'

    def applies(self, scenario, controller, topology):
        return not topology.is_ring and _undisturbed_bidirectional(
            scenario, controller)

    def margins(self, trajectory, scenario, controller, topology):
        bound = prop2_bound(scenario.initial_platoon_state(), controller)
        return trajectory.t, (bound[None, :] - trajectory.spacings).min(axis=1)


@MONITORS.register_module()
class SpeedEnvelopeMonitor(BaseMonitor):
    """When the exponential-regime premise holds on an open road, speed
    deviations stay under ``(v_max / 2) Gamma exp(-mu t)`` and spacings at or
    above ``lambda``."""

    name = 'speed_envelope'
    tolerance = 1e-9

    def applies(self, scenario, controller, topology):
        if topology.is_ring or not _undisturbed_bidirectional(scenario, controller):
            return False
        return prop3_check(scenario.initial_platoon_state(), controller).premise_holds

    def margins(self, trajectory, scenario, controller, topology):
        regime = prop3_check(scenario.initial_platoon_state(), controller)
        t = trajectory.t
        deviation = np.abs(trajectory.speeds - controller.v_star).max(axis=1)
        speed_margin = regime.speed_envelope(t) - deviation
        floor_margin = trajectory.spacings.min(axis=1) - regime.spacing_floor
        return t, np.minimum(speed_margin, floor_margin) + self.tolerance


@MONITORS.register_module()
class RingLengthMonitor(BaseMonitor):
    """Spacings on a ring add up to ``R`` within ``1e-8``."""

    name = 'ring_length'
    tolerance = 1e-8

    def applies(self, scenario, controller, topology):
        return topology.is_ring

    def margins(self, trajectory, scenario, controller, topology):
        total = trajectory.ring_spacing + trajectory.spacings.sum(axis=1)
        return trajectory.t, self.tolerance - np.abs(total - topology.length)


DEFAULT_MONITORS = ('spacing', 'speed', 'lyapunov', 'spacing_ceiling',
                    'speed_envelope', 'ring_length')


def build_monitors(toggles=None):
    toggles = toggles or {}
    by_name = {cls.name: cls for cls in MONITORS.module_dict.values()}
    return [by_name[name]() for name in DEFAULT_MONITORS if toggles.get(name, True)]


def run_monitors(trajectory, scenario):
    """Evaluate every enabled and applicable monitor on ``trajectory``.

    Monitors can be switched off through ``scenario.monitors``, e.g.
    ``dict(lyapunov=False)``.
    """
    controller = scenario.build_controller()
    topology = scenario.build_topology()
    results = [
        m.evaluate(trajectory, scenario, controller, topology)
        for m in build_monitors(scenario.monitors)
    ]
    return MonitorReport(results)


def print_monitor_summary(report, logger=None):
    if logger == 'silent':
        return
    table_data = [['monitor', 'applies', 'worst margin', 'first violation', 'result']]
    for r in report.results.values():
        table_data.append([
            r.name,
            str(r.applicable),
            '-' if r.worst_margin is None else '{:.4g}'.format(r.worst_margin),
            '-' if r.first_violation is None else '{:.4f}'.format(r.first_violation),
            'PASS' if r.passed else 'FAIL',
        ])
    table = AsciiTable(table_data)
    table.inner_footing_row_border = False
    print_log('\n' + table.table, logger=logger)
