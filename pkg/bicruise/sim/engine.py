# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import os.path as osp
import time

import numpy as np

from bicruise.core.lyapunov import lyapunov_sample
from bicruise.models import BidirectionalCruise
from bicruise.utils import DomainError, get_root_logger, mkdir_or_exist
from .hooks import Hook, LogBuffer, SimLoggerHook, StepStatsHook, get_priority
from .integrators import hermite_interpolate
from .trajectory import TerminationReason, Trajectory


def sample_grid(t_end, stride):
    """Output times ``0, stride, 2 stride, ...`` up to ``t_end``; ``t_end``
    itself is always the last entry."""
    count = int(np.floor(t_end / stride + 1e-9))
    grid = stride * np.arange(count + 1)
    if t_end - grid[-1] > 1e-9 * max(1.0, t_end):
        grid = np.append(grid, t_end)
    else:
        grid[-1] = t_end
    return grid


class Simulator(object):
    """Advances a :class:`~bicruise.models.Platoon` and records a trajectory.

    Trial steps are rejected, and the step halved, when the new state or any
    stage leaves the open state space, when the embedded error estimate is
    too large, or (adaptive stepping, bidirectional law, no disturbance) when
    the Lyapunov function grows by more than ``atol + rtol * H``. Rejected
    steps are never projected back. When the step shrinks below ``dt_min``
    the run stops and the trajectory keeps what was recorded.

    Args:
        platoon (:obj:`Platoon`): Topology, controller and disturbance.
        integrator (:obj:`BaseIntegrator`): Trial step generator.
        t_end (float): Final time.
        sample_stride (float): Output grid spacing.
        work_dir (str, optional): Directory for the JSON-lines log.
        logger (:obj:`logging.Logger`, optional): Defaults to the root logger.
        scenario_hash (str, optional): Recorded in the trajectory metadata.
    """

    def __init__(self,
                 platoon,
                 integrator,
                 t_end,
                 sample_stride,
                 work_dir=None,
                 logger=None,
                 log_level=None,
                 scenario_hash=None):
        self.platoon = platoon
        self.integrator = integrator
        self.t_end = float(t_end)
        self.sample_stride = float(sample_stride)
        if isinstance(work_dir, str):
            self.work_dir = osp.abspath(work_dir)
            mkdir_or_exist(self.work_dir)
        elif work_dir is None:
            self.work_dir = None
        else:
            raise TypeError('"work_dir" must be a str or None')
        self.logger = logger or get_root_logger(log_level=log_level)
        self.timestamp = time.strftime('%Y%m%d_%H%M%S', time.localtime())
        self.scenario_hash = scenario_hash
        self.log_buffer = LogBuffer()
        self.monitor_lyapunov = (
            integrator.adaptive and platoon.disturbance is None and
            isinstance(platoon.controller, BidirectionalCruise))

        self._hooks = []
        self._step = 0
        self.t = 0.0
        self.last_dt = None
        self.last_H = None
        self.trajectory = None

    @property
    def hooks(self):
        return self._hooks

    @property
    def step(self):
        """Number of accepted steps."""
        return self._step

    def register_hook(self, hook, priority='NORMAL'):
        """Register a hook into the hook list.

        Args:
            hook (:obj:`Hook`): The hook to be registered.
            priority (int or str or :obj:`Priority`): Hook priority.
                Lower value means higher priority.
        """
        assert isinstance(hook, Hook)
        if hasattr(hook, 'priority'):
            raise ValueError('"priority" is a reserved attribute for hooks')
        priority = get_priority(priority)
        hook.priority = priority
        inserted = False
        for i in range(len(self._hooks) - 1, -1, -1):
            if priority >= self._hooks[i].priority:
                self._hooks.insert(i + 1, hook)
                inserted = True
                break
        if not inserted:
            self._hooks.insert(0, hook)

    def register_logger_hooks(self, interval=1000):
        self.register_hook(StepStatsHook(), priority='HIGH')
        self.register_hook(SimLoggerHook(interval), priority='VERY_LOW')

    def call_hook(self, fn_name):
        for hook in self._hooks:
            getattr(hook, fn_name)(self)

    def _lyapunov(self, t, y):
        state = self.platoon.observed(t, y)
        return lyapunov_sample(state, self.platoon.topology,
                               self.platoon.controller)

    def _record(self, t, y):
        state = self.platoon.observed(t, y)
        accels = self.platoon.accelerations(t, y)
        sample = lyapunov_sample(state, self.platoon.topology,
                                 self.platoon.controller)
        self.trajectory.append(t, state, accels, sample)
        self.call_hook('after_sample')

    def _try(self, t, y, dt, f0):
        """Run one trial step; ``None`` if it left the state space."""
        try:
            trial = self.integrator.trial(self._rhs, t, y, dt, f0)
        except DomainError:
            return None
        if not np.all(np.isfinite(trial.y)) or not self.platoon.admissible(
                t + dt, trial.y):
            return None
        return trial

    def _rhs(self, t, y):
        self.trajectory.stats['rhs_evals'] += 1
        out = self.platoon.rhs(t, y)
        if not np.all(np.isfinite(out)):
            raise DomainError('non-finite right-hand side at t={}'.format(t))
        return out

    def run(self, y0):
        """Integrate from ``y0`` at ``t = 0`` and return the trajectory."""
        platoon = self.platoon
        self.trajectory = Trajectory(
            platoon.n,
            ring_length=platoon.topology.length
            if platoon.topology.is_ring else None,
            scenario_hash=self.scenario_hash,
            settings=dict(integrator=self.integrator.to_dict(),
                          t_end=self.t_end,
                          sample_stride=self.sample_stride))
        grid = sample_grid(self.t_end, self.sample_stride)
        t, y = 0.0, np.asarray(y0, dtype=np.float64).copy()
        self.t = t
        f0 = self._rhs(t, y)
        H = self._lyapunov(t, y).H
        self.last_H = H
        self._record(t, y)
        next_sample = 1

        self.call_hook('before_run')
        dt = self.integrator.initial_dt
        integrator = self.integrator
        rtol = getattr(integrator, 'rtol', 0.0)
        atol = getattr(integrator, 'atol', 0.0)
        last_failure = None
        stats = self.trajectory.stats
        while self.t_end - t > 1e-12 * max(1.0, self.t_end):
            dt = min(dt, integrator.max_dt, self.t_end - t)
            if dt < integrator.dt_min:
                self._terminate(t, last_failure)
                break
            self.call_hook('before_step')
            trial = self._try(t, y, dt, f0)
            failure = None
            if trial is None:
                failure = TerminationReason.STATE_SPACE_VIOLATION
                next_dt = 0.5 * dt
            elif not integrator.error_ok(trial.error):
                failure = TerminationReason.STEP_UNDERFLOW
                next_dt = integrator.rejected_dt(dt, trial.error)
            else:
                H_new = None
                if self.monitor_lyapunov:
                    H_new = self._lyapunov(t + dt, trial.y).H
                    if H_new > H + atol + rtol * H:
                        failure = TerminationReason.STEP_UNDERFLOW
                        next_dt = 0.5 * dt
            if failure is not None:
                stats['rejected'] += 1
                last_failure = failure
                self.call_hook('after_reject')
                dt = next_dt
                continue

            t_new = self.t_end if self.t_end - (t + dt) <= 1e-12 * max(
                1.0, self.t_end) else t + dt
            while next_sample < grid.size and grid[next_sample] <= t_new + 1e-12:
                tau = grid[next_sample]
                if abs(tau - t_new) <= 1e-12 * max(1.0, self.t_end):
                    y_tau = trial.y
                else:
                    y_tau = hermite_interpolate(t, y, f0, t + dt, trial.y,
                                                trial.f_end, tau)
                self.t = tau
                self._record(tau, y_tau)
                next_sample += 1
            t, y, f0 = t_new, trial.y, trial.f_end
            self.t = t
            self.last_dt = dt
            H = H_new if H_new is not None else H
            self.last_H = H_new if H_new is not None else self.trajectory.last_value('H')
            stats['accepted'] += 1
            self.call_hook('after_step')
            self._step += 1
            last_failure = None
            dt = integrator.accepted_dt(dt, trial.error)

        self.trajectory.freeze()
        self.call_hook('after_run')
        return self.trajectory

    def _terminate(self, t, failure):
        reason = failure or TerminationReason.STEP_UNDERFLOW
        self.trajectory.termination = reason
        self.trajectory.termination_time = float(t)
        self.logger.warning('integration stopped at t={:.6g}: {}'.format(
            t, reason.value))


def integrate(scenario, work_dir=None, logger=None, log_interval=None):
    """Integrate a scenario and return its :class:`Trajectory`.

    Args:
        scenario: An object providing ``build_platoon``, ``build_integrator``,
            ``initial_platoon_state``, ``t_end``, ``sample_stride`` and
            ``hash``, typically :class:`bicruise.apis.Scenario`.
    """
    platoon = scenario.build_platoon()
    simulator = Simulator(platoon,
                          scenario.build_integrator(),
                          scenario.t_end,
                          scenario.sample_stride,
                          work_dir=work_dir,
                          logger=logger,
                          scenario_hash=scenario.hash)
    if log_interval:
        simulator.register_logger_hooks(log_interval)
    return simulator.run(scenario.initial_platoon_state().as_vector())
