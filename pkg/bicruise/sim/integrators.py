# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Explicit Runge-Kutta steppers.

A stepper only computes trial steps; accepting or rejecting them against
the state space, the error estimate and the Lyapunov monitor is up to
:class:`bicruise.sim.engine.Simulator`.
"""
from abc import ABCMeta, abstractmethod
from collections import namedtuple

import numpy as np

from bicruise.utils import ConfigurationError, Registry, build_from_cfg

INTEGRATORS = Registry('integrator')

# ``f_end`` is the right-hand side at the end of the step; it feeds the next
# step and the Hermite dense output.
TrialStep = namedtuple('TrialStep', ['y', 'f_end', 'error', 'evals'])


def hermite_interpolate(t0, y0, f0, t1, y1, f1, tau):
    """Cubic Hermite interpolant of an accepted step evaluated at ``tau``."""
    h = t1 - t0
    theta = (tau - t0) / h
    theta2 = theta * theta
    theta3 = theta2 * theta
    h00 = 2 * theta3 - 3 * theta2 + 1
    h10 = theta3 - 2 * theta2 + theta
    h01 = -2 * theta3 + 3 * theta2
    h11 = theta3 - theta2
    return h00 * y0 + h10 * h * f0 + h01 * y1 + h11 * h * f1


class BaseIntegrator(metaclass=ABCMeta):

    adaptive = False

    def __init__(self, dt_min=1e-10):
        if not dt_min > 0:
            raise ConfigurationError('dt_min must be positive, got {}'.format(dt_min))
        self.dt_min = float(dt_min)

    @property
    @abstractmethod
    def initial_dt(self):
        pass

    @property
    @abstractmethod
    def max_dt(self):
        pass

    @abstractmethod
    def trial(self, fun, t, y, dt, f0):
        """Return a :class:`TrialStep` from ``(t, y)`` over ``dt``."""
        pass

    def accepted_dt(self, dt, error):
        """Step size to try after an accepted step."""
        return dt

    def rejected_dt(self, dt, error):
        """Step size to retry with after the error test failed."""
        return 0.5 * dt

    def error_ok(self, error):
        return True

    @abstractmethod
    def to_dict(self):
        pass


@INTEGRATORS.register_module()
class RK4Fixed(BaseIntegrator):
    """Classical fourth-order Runge-Kutta with a nominal fixed step.

    A step halved after a state-space rejection grows back by doubling, so
    the nominal grid resumes once the trouble is passed.
    """

    def __init__(self, dt=1e-3, dt_min=1e-10):
        super(RK4Fixed, self).__init__(dt_min)
        if not dt > 0:
            raise ConfigurationError('dt must be positive, got {}'.format(dt))
        self.dt = float(dt)

    @property
    def initial_dt(self):
        return self.dt

    @property
    def max_dt(self):
        return self.dt

    def trial(self, fun, t, y, dt, f0):
        k1 = f0
        k2 = fun(t + 0.5 * dt, y + 0.5 * dt * k1)
        k3 = fun(t + 0.5 * dt, y + 0.5 * dt * k2)
        k4 = fun(t + dt, y + dt * k3)
        y_new = y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        f_end = fun(t + dt, y_new)
        return TrialStep(y_new, f_end, 0.0, 4)

    def accepted_dt(self, dt, error):
        return min(2.0 * dt, self.dt)

    def to_dict(self):
        return dict(type='RK4Fixed', dt=self.dt, dt_min=self.dt_min)


@INTEGRATORS.register_module()
class RK45Adaptive(BaseIntegrator):
    """Dormand-Prince 5(4) pair with first-same-as-last stages.

    The error norm is the RMS of the embedded difference scaled by
    ``atol + rtol * max(|y|, |y_new|)``; a step passes when it is at most 1.
    """

    adaptive = True

    C = np.array([0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1, 1])
    A = [
        [],
        [1 / 5],
        [3 / 40, 9 / 40],
        [44 / 45, -56 / 15, 32 / 9],
        [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
        [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
        [35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
    ]
    B = np.array([35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0])
    # fifth minus fourth order weights
    E = np.array([
        71 / 57600, 0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525,
        -1 / 40
    ])

    SAFETY = 0.9
    MIN_FACTOR = 0.2
    MAX_FACTOR = 5.0

    def __init__(self, rtol=1e-8, atol=1e-10, dt_init=1e-3, dt_min=1e-10,
                 dt_max=0.05):
        super(RK45Adaptive, self).__init__(dt_min)
        if not (rtol > 0 and atol > 0):
            raise ConfigurationError('rtol and atol must be positive')
        if not (dt_init > 0 and dt_max >= dt_min):
            raise ConfigurationError('need dt_init > 0 and dt_max >= dt_min')
        self.rtol = float(rtol)
        self.atol = float(atol)
        self.dt_init = float(dt_init)
        self.dt_max = float(dt_max)

    @property
    def initial_dt(self):
        return min(self.dt_init, self.dt_max)

    @property
    def max_dt(self):
        return self.dt_max

    def trial(self, fun, t, y, dt, f0):
        k = [f0]
        for i in range(1, 7):
            dy = dt * sum(a * kj for a, kj in zip(self.A[i], k) if a != 0)
            k.append(fun(t + self.C[i] * dt, y + dy))
        # the seventh stage is evaluated at the new point, so it is f_end
        y_new = y + dt * sum(b * kj for b, kj in zip(self.B, k) if b != 0)
        err_vec = dt * sum(e * kj for e, kj in zip(self.E, k) if e != 0)
        scale = self.atol + self.rtol * np.maximum(np.abs(y), np.abs(y_new))
        error = float(np.sqrt(np.mean((err_vec / scale)**2)))
        return TrialStep(y_new, k[6], error, 6)

    def error_ok(self, error):
        return error <= 1.0

    def _factor(self, error):
        if error == 0.0:
            return self.MAX_FACTOR
        return min(self.MAX_FACTOR,
                   max(self.MIN_FACTOR, self.SAFETY * error**-0.2))

    def accepted_dt(self, dt, error):
        return min(dt * self._factor(error), self.dt_max)

    def rejected_dt(self, dt, error):
        return dt * min(1.0, self._factor(error))

    def to_dict(self):
        return dict(type='RK45Adaptive', rtol=self.rtol, atol=self.atol,
                    dt_init=self.dt_init, dt_min=self.dt_min,
                    dt_max=self.dt_max)


def build_integrator(cfg):
    return build_from_cfg(cfg, INTEGRATORS)
