# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .config import Config, ConfigDict
from .errors import (ArgumentError, BicruiseError, ConfigurationError,
                     DomainError, IntegrationError, ScenarioError)
from .logger import get_root_logger, print_log
from .path import check_file_exist, mkdir_or_exist, scandir
from .progressbar import ProgressBar, track_parallel_progress, track_progress
from .registry import Registry, build_from_cfg
from .timer import Timer, TimerError

__all__ = [
    'Config', 'ConfigDict', 'Registry', 'build_from_cfg', 'get_root_logger',
    'print_log', 'check_file_exist', 'mkdir_or_exist', 'scandir',
    'ProgressBar', 'track_progress', 'track_parallel_progress', 'Timer',
    'TimerError', 'BicruiseError', 'DomainError', 'ArgumentError',
    'ConfigurationError', 'ScenarioError', 'IntegrationError'
]
