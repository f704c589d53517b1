# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from time import perf_counter


class TimerError(Exception):

    def __init__(self, message):
        self.message = message
        super(TimerError, self).__init__(message)


class Timer(object):
    """Wall clock timer used for run reports and progress bars.

    :Example:

    >>> timer = Timer()
    >>> trajectory = integrate(scenario)
    >>> timer.since_start()
    0.731
    """

    def __init__(self, start=True):
        self._is_running = False
        if start:
            self.start()

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, type, value, traceback):
        self._is_running = False

    def start(self):
        if not self._is_running:
            self._t_start = perf_counter()
            self._is_running = True
        self._t_last = perf_counter()

    def since_start(self):
        """Total time since the timer is started, in seconds."""
        if not self._is_running:
            raise TimerError('timer is not running')
        self._t_last = perf_counter()
        return self._t_last - self._t_start

    def since_last_check(self):
        """Time since the last call to a checking method, in seconds."""
        if not self._is_running:
            raise TimerError('timer is not running')
        dur = perf_counter() - self._t_last
        self._t_last = perf_counter()
        return dur
