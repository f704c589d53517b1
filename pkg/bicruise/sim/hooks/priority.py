# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from enum import Enum


class Priority(Enum):
    """Slots in the simulator's hook order; lower values run first.

    ``HIGH`` is taken by :class:`StepStatsHook`, so counters and timings are
    current when any other hook reads them. ``VERY_LOW`` is taken by
    :class:`SimLoggerHook`, which writes what the other hooks have put into
    the log buffer. User hooks default to ``NORMAL``.
    """

    HIGH = 30
    NORMAL = 50
    VERY_LOW = 90


def get_priority(priority):
    """Numeric priority of a level name, a :class:`Priority` or an int in
    ``[0, 100]``."""
    if isinstance(priority, bool):
        raise TypeError('priority must be an integer, a level name or Priority')
    if isinstance(priority, int):
        if priority < 0 or priority > 100:
            raise ValueError('priority must be between 0 and 100')
        return priority
    if isinstance(priority, Priority):
        return priority.value
    if isinstance(priority, str):
        try:
            return Priority[priority.upper()].value
        except KeyError:
            raise ValueError('unknown priority "{}", expected one of {}'.format(
                priority, [p.name for p in Priority])) from None
    raise TypeError('priority must be an integer, a level name or Priority')
