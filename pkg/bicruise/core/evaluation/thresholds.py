# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import math
from collections import namedtuple

from terminaltables import AsciiTable

from bicruise.utils import ConfigurationError, print_log

ThresholdResult = namedtuple('ThresholdResult',
                             ['metric', 'value', 'bound', 'passed'])

_OPERATORS = {
    'max': ('<=', lambda x, b: x <= b),
    'min': ('>=', lambda x, b: x >= b),
    'below': ('<', lambda x, b: x < b),
    'above': ('>', lambda x, b: x > b),
}


def evaluate_thresholds(metrics, thresholds):
    """Compare run metrics against acceptance thresholds.

    Args:
        metrics (dict): Metric name -> measured value. A missing metric or a
            ``None`` value fails every bound placed on it.
        thresholds (dict): Metric name -> dict of bounds, e.g.
            ``dict(speed_error=dict(max=1e-3))``. Supported bound keys are
            ``max`` (<=), ``min`` (>=), ``below`` (<) and ``above`` (>).

    Returns:
        list[ThresholdResult]
    """
    results = []
    for metric, bounds in thresholds.items():
        if not isinstance(bounds, dict):
            raise ConfigurationError(
                'threshold for {} must be a dict of bounds, got {}'.format(
                    metric, bounds))
        value = metrics.get(metric)
        for key, limit in bounds.items():
            if key not in _OPERATORS:
                raise ConfigurationError('unknown bound "{}" for {}'.format(
                    key, metric))
            symbol, check = _OPERATORS[key]
            ok = (value is not None and limit is not None and
                  not (isinstance(value, float) and math.isnan(value)) and
                  check(value, limit))
            results.append(
                ThresholdResult(metric, value, '{} {}'.format(symbol, limit),
                                bool(ok)))
    return results


def _fmt(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return '{:.6g}'.format(value)
    return str(value)


def print_threshold_summary(results, logger=None):
    if logger == 'silent':
        return
    table_data = [['metric', 'value', 'bound', 'result']]
    for r in results:
        table_data.append(
            [r.metric, _fmt(r.value), r.bound, 'PASS' if r.passed else 'FAIL'])
    table = AsciiTable(table_data)
    print_log('\n' + table.table, logger=logger)
