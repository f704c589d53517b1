# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .convergence import convergence_time
from .decay import DecayFit, fit_decay_above_floor, fit_decay_rate
from .string_stability import (DisturbancePeaks, disturbance_peaks,
                               print_peak_summary)
from .thresholds import (ThresholdResult, evaluate_thresholds,
                         print_threshold_summary)

__all__ = [
    'convergence_time', 'DecayFit', 'fit_decay_rate', 'fit_decay_above_floor',
    'DisturbancePeaks', 'disturbance_peaks', 'print_peak_summary',
    'ThresholdResult', 'evaluate_thresholds', 'print_threshold_summary'
]
