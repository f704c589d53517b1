# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from bicruise.utils import Timer
from .hook import Hook


class StepStatsHook(Hook):
    """Feeds step size and wall time of each accepted step into the
    runner's log buffer."""

    def before_run(self, runner):
        self.timer = Timer()

    def after_step(self, runner):
        runner.log_buffer.update({
            'dt': runner.last_dt,
            'time': self.timer.since_last_check()
        })
