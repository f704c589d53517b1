# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import numpy as np

from bicruise.utils import ConfigurationError

WINDOW = (0.5 * np.pi, 2.5 * np.pi)
# vehicle 1 slows down on the first and speeds back up on the second
PHASES = dict(deceleration=(0.5 * np.pi, np.pi),
              acceleration=(np.pi, 2.0 * np.pi))


class DisturbanceSchedule(object):
    """Prescribed speed of vehicle 1.

    ``v_1(t) = v* + d cos(t)`` on ``[pi/2, 5pi/2)`` and ``v*`` elsewhere.
    The signal is continuous since ``cos`` vanishes at both ends of the
    window.

    Args:
        amplitude (float): ``d``, with ``0 < d < min(v*, v_max - v*)`` so the
            signal stays inside ``(0, v_max)``.
        v_star (float): Desired speed.
        v_max (float): Speed limit.
    """

    def __init__(self, amplitude, v_star, v_max):
        amplitude = float(amplitude)
        if not 0 < amplitude < min(v_star, v_max - v_star):
            raise ConfigurationError(
                'disturbance amplitude must lie in (0, {}), got {}'.format(
                    min(v_star, v_max - v_star), amplitude))
        self.amplitude = amplitude
        self.v_star = float(v_star)
        self.v_max = float(v_max)
        self.window = WINDOW
        self.phases = PHASES

    @classmethod
    def from_saturation(cls, amplitude, saturation):
        return cls(amplitude, saturation.v_star, saturation.v_max)

    def __repr__(self):
        return 'DisturbanceSchedule(amplitude={!r}, v_star={!r})'.format(
            self.amplitude, self.v_star)

    def active(self, t):
        return (t >= self.window[0]) & (t < self.window[1])

    def signal(self, t):
        t_arr = np.asarray(t, dtype=np.float64)
        out = np.where(self.active(t_arr),
                       self.v_star + self.amplitude * np.cos(t_arr),
                       self.v_star)
        return float(out) if out.ndim == 0 else out

    def derivative(self, t):
        t_arr = np.asarray(t, dtype=np.float64)
        out = np.where(self.active(t_arr), -self.amplitude * np.sin(t_arr), 0.0)
        return float(out) if out.ndim == 0 else out


def disturbance_signal(t, schedule, saturation):
    """Vehicle 1's prescribed speed around the desired speed of
    ``saturation``."""
    offset = schedule.signal(t) - schedule.v_star
    return saturation.v_star + offset
