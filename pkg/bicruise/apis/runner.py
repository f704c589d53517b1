# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import logging
import os.path as osp
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd
from terminaltables import AsciiTable

from bicruise.core.evaluation import (convergence_time, disturbance_peaks,
                                      evaluate_thresholds, fit_decay_above_floor,
                                      print_peak_summary, print_threshold_summary)
from bicruise.core.lyapunov import (dist_to_equilibrium, equilibrium_set, mu_n,
                                    rate_omega_bar)
from bicruise.sim import integrate, print_monitor_summary, run_monitors
from bicruise.utils import (ArgumentError, BicruiseError, Timer,
                            get_root_logger, mkdir_or_exist, print_log,
                            track_parallel_progress, track_progress)
from bicruise.utils.fileio import dump
from .emit import FLOAT_FORMAT, emit_run
from .presets import resolve_scenario
from .scenario import SWEEP_AXES, Scenario

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_INTEGRATION_FAILED = 3


@dataclass
class RunReport:
    """Outcome of one simulated scenario."""

    scenario: str
    scenario_hash: str
    termination: str
    termination_time: Optional[float]
    monitors: object
    terminal_state: dict
    dist_to_equilibrium: float
    metrics: dict
    thresholds: list = field(default_factory=list)
    files: dict = field(default_factory=dict)
    string_stability: Optional[dict] = None
    elapsed: float = 0.0
    trajectory: object = field(default=None, repr=False, compare=False)

    @property
    def completed(self):
        return self.termination == 'Completed'

    @property
    def passed(self):
        return (self.completed and self.monitors.passed and
                all(r.passed for r in self.thresholds))

    @property
    def exit_code(self):
        if not self.completed:
            return EXIT_INTEGRATION_FAILED
        return EXIT_OK if self.passed else EXIT_VERIFY_FAILED

    def to_dict(self):
        return OrderedDict(
            scenario=self.scenario,
            scenario_hash=self.scenario_hash,
            termination=self.termination,
            termination_time=self.termination_time,
            passed=self.passed,
            monitors=self.monitors.to_dict(),
            terminal_state=self.terminal_state,
            dist_to_equilibrium=self.dist_to_equilibrium,
            metrics=self.metrics,
            thresholds=[r._asdict() for r in self.thresholds],
            string_stability=self.string_stability,
            files=self.files)


def _safe_fit(t, values, scenario):
    try:
        return fit_decay_above_floor(t, values,
                                     floor=scenario.analysis['decay_floor'],
                                     tail_fraction=scenario.analysis['decay_tail_fraction'])
    except ArgumentError:
        return None


def compute_metrics(trajectory, scenario, monitors=None):
    """Scalar summaries of a run that acceptance thresholds refer to."""
    controller = scenario.build_controller()
    topology = scenario.build_topology()
    n = trajectory.n
    v_star = controller.v_star
    t = trajectory.t
    speed_dev = np.abs(trajectory.speeds - v_star).max(axis=1)
    final_spacings = trajectory.full_spacings()[-1]

    metrics = OrderedDict()
    metrics['t_final'] = float(t[-1])
    metrics['speed_error'] = float(speed_dev[-1])
    metrics['final_min_spacing'] = float(np.min(final_spacings))
    metrics['min_spacing'] = float(np.min(trajectory.min_spacing))
    metrics['H_end'] = float(trajectory.H[-1])
    metrics['max_abs_accel'] = float(np.max(trajectory.max_abs_accel))
    metrics['convergence_time'] = convergence_time(
        t, speed_dev, scenario.analysis['convergence_tolerance'])

    fit = _safe_fit(t, trajectory.H, scenario)
    metrics['h_decay_slope'] = fit.slope if fit else None
    metrics['h_decay_r2'] = fit.r_squared if fit else None

    if topology.is_ring:
        metrics['mu_n'] = mu_n(n)
        metrics['spacing_error'] = float(
            np.max(np.abs(final_spacings - topology.uniform_spacing(n))))
    if trajectory.U is not None:
        metrics['U_end'] = float(trajectory.U[-1])
        rates = rate_omega_bar(controller, topology, n, scenario.analysis['g_frak'])
        metrics['omega_bar'] = rates.omega_bar
        fit = _safe_fit(t, trajectory.U, scenario)
        metrics['u_decay_slope'] = fit.slope if fit else None
        metrics['u_decay_r2'] = fit.r_squared if fit else None
        metrics['u_decay_excess'] = (fit.slope + rates.omega_bar) if fit else None
    if scenario.disturbance:
        peaks = disturbance_peaks(t, trajectory.speeds,
                                  scenario.build_disturbance(controller))
        metrics['max_follower_peak'] = peaks.max_follower_peak()
        for name in peaks.peaks:
            metrics['{}_peaks_nonincreasing'.format(name)] = peaks.is_nonincreasing(name)
    if monitors is not None:
        metrics['monitors_passed'] = monitors.passed
    return metrics


def _resolve_reference_bounds(thresholds, overrides, logger):
    """Replace preset-name bounds by that preset's measured metric."""
    resolved = OrderedDict()
    cache = {}
    for metric, bounds in thresholds.items():
        resolved[metric] = OrderedDict()
        for key, limit in bounds.items():
            if isinstance(limit, str):
                if limit not in cache:
                    print_log('running reference scenario {}'.format(limit),
                              logger=logger)
                    cache[limit] = simulate(limit, overrides=overrides,
                                            logger='silent', emit=False)
                limit = cache[limit].metrics.get(metric)
            resolved[metric][key] = limit
    return resolved


def simulate(source, out_dir=None, overrides=None, logger=None, emit=True,
             plots=True, log_interval=None):
    """Integrate a scenario, run the monitors and emit its files.

    Args:
        source (str | Scenario): Scenario file, preset name or scenario.
        out_dir (str, optional): Where CSV, plot and report files go. Nothing
            is written when None.
        overrides (dict, optional): Keyword arguments of
            :meth:`Scenario.with_overrides`.
        logger (logging.Logger | str | None): See :func:`print_log`.

    Returns:
        RunReport
    """
    scenario = resolve_scenario(source)
    if overrides:
        scenario = scenario.with_overrides(**overrides)
    scenario.validate()
    log_target = logger
    sim_logger = logger if isinstance(logger, logging.Logger) else get_root_logger()
    print_log('simulating {} (hash {})'.format(scenario.name, scenario.hash),
              logger=log_target)

    timer = Timer()
    trajectory = integrate(scenario, work_dir=out_dir, logger=sim_logger,
                           log_interval=log_interval)
    elapsed = timer.since_start()
    monitors = run_monitors(trajectory, scenario)
    metrics = compute_metrics(trajectory, scenario, monitors)

    controller = scenario.build_controller()
    final = trajectory.final_state
    eq = equilibrium_set(scenario.build_topology(), scenario.n, controller)
    report = RunReport(
        scenario=scenario.name,
        scenario_hash=scenario.hash,
        termination=trajectory.termination.value,
        termination_time=trajectory.termination_time,
        monitors=monitors,
        terminal_state=dict(spacings=final.spacings.tolist(),
                            speeds=final.speeds.tolist()),
        dist_to_equilibrium=dist_to_equilibrium(final, eq),
        metrics=metrics,
        elapsed=elapsed,
        trajectory=trajectory)
    if scenario.disturbance:
        peaks = disturbance_peaks(trajectory.t, trajectory.speeds,
                                  scenario.build_disturbance(controller))
        report.string_stability = OrderedDict(
            (name, dict(peaks=p.tolist(), order=peaks.orders[name],
                        nonincreasing=peaks.is_nonincreasing(name)))
            for name, p in peaks.peaks.items())
        print_peak_summary(peaks, logger=log_target)

    print_monitor_summary(monitors, logger=log_target)
    if out_dir is not None and emit:
        files = emit_run(trajectory, out_dir, controller.v_star,
                         disturbed=bool(scenario.disturbance), plots=plots)
        scenario_file = osp.join(out_dir, 'scenario.yaml')
        dump(scenario.to_dict(), scenario_file)
        files['scenario'] = scenario_file
        report.files = files
        report_file = osp.join(out_dir, 'report.json')
        report.files['report'] = report_file
        dump(report.to_dict(), report_file, indent=2)
    print_log('{}: {} at t={:.6g} in {:.2f}s, monitors {}'.format(
        scenario.name, report.termination, metrics['t_final'], elapsed,
        'PASS' if monitors.passed else 'FAIL: ' + ', '.join(monitors.failures)),
        logger=log_target)
    return report


def verify(source, thresholds=None, out_dir=None, overrides=None, logger=None,
           plots=True):
    """Simulate and check the scenario's acceptance thresholds.

    ``thresholds`` replaces the scenario's own when given. A bound may be a
    preset name, in which case that preset is simulated with the same
    overrides and its value of the metric is used.

    Returns:
        RunReport: ``exit_code`` is 0 on success, 1 when a monitor or a
        threshold failed and 3 when integration stopped early.
    """
    scenario = resolve_scenario(source)
    if overrides:
        scenario = scenario.with_overrides(**overrides)
    report = simulate(scenario, out_dir=out_dir, logger=logger, plots=plots)
    bounds = scenario.thresholds if thresholds is None else thresholds
    bounds = _resolve_reference_bounds(bounds, overrides, logger)
    report.thresholds = evaluate_thresholds(report.metrics, bounds)
    print_threshold_summary(report.thresholds, logger=logger)
    if out_dir is not None:
        dump(report.to_dict(), osp.join(out_dir, 'report.json'), indent=2)
    print_log('verify {}: {}'.format(scenario.name,
                                     'PASS' if report.passed else 'FAIL'),
              logger=logger)
    return report


SWEEP_COLUMNS = ['value', 'status', 'termination', 'convergence_time',
                 'decay_slope', 'decay_r2', 'max_abs_accel', 'monitors',
                 'mu_n', 'omega_bar']


def _sweep_row(task):
    scenario_dict, axis, value, out_dir = task
    row = OrderedDict((k, None) for k in SWEEP_COLUMNS)
    row['value'] = value
    try:
        scenario = Scenario(**scenario_dict).with_parameter(axis, value)
        row_dir = None if out_dir is None else osp.join(
            out_dir, '{}_{}'.format(axis, value))
        report = simulate(scenario, out_dir=row_dir, logger='silent', plots=False)
    except BicruiseError as e:
        row['status'] = 'error: {}'.format(e)
        return row
    m = report.metrics
    row['status'] = 'ok'
    row['termination'] = report.termination
    row['convergence_time'] = m['convergence_time']
    if m.get('u_decay_slope') is not None:
        row['decay_slope'], row['decay_r2'] = m['u_decay_slope'], m['u_decay_r2']
    else:
        row['decay_slope'], row['decay_r2'] = m['h_decay_slope'], m['h_decay_r2']
    row['max_abs_accel'] = m['max_abs_accel']
    row['monitors'] = 'PASS' if report.monitors.passed else 'FAIL'
    row['mu_n'] = m.get('mu_n')
    row['omega_bar'] = m.get('omega_bar')
    return row


def sweep(source, axis, values, nproc=1, out_dir=None, overrides=None,
          logger=None):
    """Simulate the base scenario once per value of ``axis``.

    Rows are independent: a value whose scenario is invalid produces an
    error row instead of stopping the sweep. Rows come back in value order.

    Returns:
        list[OrderedDict]: One row per value.
    """
    base = resolve_scenario(source)
    if overrides:
        base = base.with_overrides(**overrides)
    if axis not in SWEEP_AXES:
        raise ArgumentError('unknown sweep axis {}'.format(axis))
    values = list(values)
    if not values:
        print_log('sweep over {}: no values'.format(axis), logger=logger)
        return []
    tasks = [(base.to_dict(), axis, v, out_dir) for v in values]
    if nproc > 1:
        rows = track_parallel_progress(_sweep_row, tasks, nproc)
    else:
        rows = track_progress(_sweep_row, tasks)
    print_sweep_summary(rows, axis, logger=logger)
    if out_dir is not None:
        mkdir_or_exist(out_dir)
        pd.DataFrame(rows, columns=SWEEP_COLUMNS).to_csv(
            osp.join(out_dir, 'sweep.csv'), index=False, float_format=FLOAT_FORMAT)
    return rows


def _cell(value):
    if value is None:
        return '-'
    if isinstance(value, float):
        return '{:.5g}'.format(value)
    return str(value)


def print_sweep_summary(rows, axis, logger=None):
    if logger == 'silent':
        return
    header = [axis] + SWEEP_COLUMNS[1:]
    table_data = [header]
    for row in rows:
        table_data.append([_cell(row[k]) for k in SWEEP_COLUMNS])
    table = AsciiTable(table_data)
    print_log('\n' + table.table, logger=logger)
