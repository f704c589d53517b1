# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from collections import namedtuple

import numpy as np
from scipy import stats

from bicruise.utils import ArgumentError

DecayFit = namedtuple('DecayFit',
                      ['slope', 'intercept', 'r_squared', 'num_points'])


def fit_decay_rate(t, values, tail_fraction=0.5, min_points=10):
    """Least-squares slope of ``log(values)`` over the last ``tail_fraction``
    of the samples.

    Args:
        t (array-like): Sample times, increasing.
        values (array-like): Positive samples.
        tail_fraction (float): Fraction of samples, counted from the end,
            used for the fit.
        min_points (int): Minimum number of samples in the window.

    Returns:
        DecayFit: slope, intercept, R^2 and the number of points used.
    """
    t = np.asarray(t, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    if t.shape != values.shape:
        raise ArgumentError('t and values must have the same shape')
    if not 0 < tail_fraction <= 1:
        raise ArgumentError('tail_fraction must lie in (0, 1], got {}'.format(
            tail_fraction))
    start = int(np.floor(t.size * (1.0 - tail_fraction)))
    t_tail, v_tail = t[start:], values[start:]
    if t_tail.size < min_points:
        raise ArgumentError('need at least {} points in the tail, got {}'.format(
            min_points, t_tail.size))
    if np.any(~(v_tail > 0)):
        raise ArgumentError('values in the fit window must be positive')
    log_v = np.log(v_tail)
    if np.ptp(log_v) == 0.0:
        return DecayFit(0.0, float(log_v[0]), 1.0, int(t_tail.size))
    slope, intercept, r_value, _, _ = stats.linregress(t_tail, log_v)
    return DecayFit(float(slope), float(intercept), float(r_value**2),
                    int(t_tail.size))


def fit_decay_above_floor(t, values, floor=1e-12, tail_fraction=0.5,
                          min_points=10):
    """:func:`fit_decay_rate` restricted to samples with ``values > floor``,
    so the fit ignores the stretch where the decay hits rounding noise."""
    t = np.asarray(t, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    keep = values > floor
    return fit_decay_rate(t[keep], values[keep], tail_fraction, min_points)
