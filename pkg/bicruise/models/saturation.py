# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import numpy as np
from scipy.special import expit

from bicruise.utils import ConfigurationError, DomainError


def _as_output(values, like):
    if np.ndim(like) == 0:
        return float(values)
    return values


class SaturationSpec(object):
    """Bounded speed offset ``b(x) = v* + (v_max / 2)(tanh(x + c) - 1)``.

    The shift ``c = arctanh(1 - 2 v* / v_max)`` makes ``b(0) = 0``. The range
    of ``b`` is ``(v* - v_max, v*)``. Both ``b`` and ``b'`` are evaluated
    through the logistic function, ``(1 - tanh z) / 2 = expit(-2z)``, which
    stays accurate far into both tails.

    Args:
        v_star (float): Desired speed.
        v_max (float): Speed limit.
    """

    def __init__(self, v_star, v_max):
        v_star, v_max = float(v_star), float(v_max)
        if not 0 < v_star < v_max:
            raise ConfigurationError(
                'need 0 < v_star < v_max, got v_star={}, v_max={}'.format(
                    v_star, v_max))
        self.v_star = v_star
        self.v_max = v_max
        self.shift = float(np.arctanh(1.0 - 2.0 * v_star / v_max))

    def __repr__(self):
        return '{}(v_star={!r}, v_max={!r})'.format(self.__class__.__name__,
                                                    self.v_star, self.v_max)

    def to_dict(self):
        return dict(v_star=self.v_star, v_max=self.v_max)

    def value(self, x):
        z = np.asarray(x, dtype=np.float64) + self.shift
        out = self.v_star - self.v_max * expit(-2.0 * z)
        return _as_output(out, x)

    def d1(self, x):
        z = np.asarray(x, dtype=np.float64) + self.shift
        out = 2.0 * self.v_max * expit(2.0 * z) * expit(-2.0 * z)
        return _as_output(out, x)

    def contains_speed(self, v):
        v = np.asarray(v, dtype=np.float64)
        return bool(np.all((v > 0) & (v < self.v_max)))


def b_value(x, spec):
    return spec.value(x)


def b_d1(x, spec):
    return spec.d1(x)


def beta(v, y, v_max):
    """Positive gain dividing the bidirectional control law.

    ``beta(v, y) = (v_max^3 (v + y) - 2 v_max^2 y v) / (2 (v_max - v)^2 v^2)``
    """
    v_arr = np.asarray(v, dtype=np.float64)
    y_arr = np.asarray(y, dtype=np.float64)
    if np.any(~((v_arr > 0) & (v_arr < v_max))):
        raise DomainError('speed must lie in (0, {}), got {}'.format(
            v_max, v))
    num = v_max**3 * (v_arr + y_arr) - 2.0 * v_max**2 * y_arr * v_arr
    den = 2.0 * (v_max - v_arr)**2 * v_arr**2
    return _as_output(num / den, v)
