# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from collections import OrderedDict
from dataclasses import dataclass

import numpy as np
from terminaltables import AsciiTable

from bicruise.utils import print_log


@dataclass
class DisturbancePeaks:
    """Peak speed deviations ``|v_i - v*|`` per vehicle and window.

    ``peaks[name][k]`` is the peak of vehicle ``k + 1``. ``orders`` lists,
    per window, the vehicle numbers in propagation order: the slow-down
    travels backwards (2, 3, ..., n) and the speed-up forwards around the
    ring (n, n-1, ..., 2).
    """

    windows: OrderedDict
    peaks: OrderedDict
    orders: OrderedDict
    amplitude: float

    def ordered_peaks(self, name):
        return self.peaks[name][np.asarray(self.orders[name]) - 1]

    def is_nonincreasing(self, name, atol=0.0):
        p = self.ordered_peaks(name)
        return bool(np.all(np.diff(p) <= atol))

    def max_follower_peak(self):
        return float(max(np.max(p[1:]) for p in self.peaks.values()))


def disturbance_peaks(t, speeds, schedule):
    t = np.asarray(t, dtype=np.float64)
    speeds = np.asarray(speeds, dtype=np.float64)
    n = speeds.shape[1]
    windows = OrderedDict(
        (name, schedule.phases[name]) for name in ('deceleration', 'acceleration'))
    orders = OrderedDict(deceleration=list(range(2, n + 1)),
                         acceleration=list(range(n, 1, -1)))
    deviation = np.abs(speeds - schedule.v_star)
    peaks = OrderedDict()
    for name, (lo, hi) in windows.items():
        mask = (t >= lo) & (t < hi)
        peaks[name] = deviation[mask].max(axis=0) if mask.any() else np.zeros(n)
    return DisturbancePeaks(windows, peaks, orders, schedule.amplitude)


def print_peak_summary(result, logger=None):
    if logger == 'silent':
        return
    header = ['window'] + ['v{}'.format(i + 1) for i in range(
        next(iter(result.peaks.values())).size)] + ['monotone']
    table_data = [header]
    for name, peak in result.peaks.items():
        table_data.append([name] + ['{:.4f}'.format(p) for p in peak] +
                          [str(result.is_nonincreasing(name))])
    table = AsciiTable(table_data)
    print_log('\n' + table.table, logger=logger)
