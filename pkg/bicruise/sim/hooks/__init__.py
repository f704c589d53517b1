# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .hook import Hook
from .log_buffer import LogBuffer
from .logger import SimLoggerHook
from .priority import Priority, get_priority
from .step_stats import StepStatsHook

__all__ = [
    'Hook', 'LogBuffer', 'SimLoggerHook', 'Priority', 'get_priority',
    'StepStatsHook'
]
