# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-


class Hook(object):
    """Callbacks invoked by :class:`bicruise.sim.engine.Simulator`."""

    def before_run(self, runner):
        pass

    def after_run(self, runner):
        pass

    def before_step(self, runner):
        pass

    def after_step(self, runner):
        """Called after every accepted step."""
        pass

    def after_reject(self, runner):
        pass

    def after_sample(self, runner):
        pass

    def every_n_steps(self, runner, n):
        return (runner.step + 1) % n == 0 if n > 0 else False
