# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import os.path as osp
from collections import OrderedDict

from bicruise.utils.fileio import dump
from .hook import Hook


class SimLoggerHook(Hook):
    """Log integration progress every ``interval`` accepted steps.

    A line reports simulated time, mean step size, the latest Lyapunov value
    and the accepted/rejected counts. With a work dir the same records are
    appended as JSON lines to ``<work_dir>/<timestamp>.log.json``.
    """

    def __init__(self, interval=1000):
        self.interval = interval
        self.json_log_path = None

    def before_run(self, runner):
        runner.log_buffer.clear()
        if runner.work_dir is not None:
            self.json_log_path = osp.join(
                runner.work_dir, '{}.log.json'.format(runner.timestamp))

    def after_step(self, runner):
        if self.every_n_steps(runner, self.interval):
            runner.log_buffer.average(self.interval)
            self.log(runner)
            runner.log_buffer.clear()

    def after_run(self, runner):
        if runner.log_buffer.val_history:
            runner.log_buffer.average()
        self.log(runner)

    def _log_info(self, log_dict, runner):
        log_str = 't [{:.4f}/{:.4f}]\t'.format(log_dict['t'], runner.t_end)
        items = []
        for name, val in log_dict.items():
            if name == 't':
                continue
            if isinstance(val, float):
                val = '{:.4g}'.format(val)
            items.append('{}: {}'.format(name, val))
        runner.logger.info(log_str + ', '.join(items))

    def _dump_log(self, log_dict):
        if self.json_log_path is None:
            return
        with open(self.json_log_path, 'a+') as f:
            dump(log_dict, f, file_format='json')
            f.write('\n')

    def log(self, runner):
        log_dict = OrderedDict()
        log_dict['t'] = float(runner.t)
        for name, val in runner.log_buffer.output.items():
            log_dict[name] = val
        log_dict['H'] = runner.last_H
        log_dict['accepted'] = runner.trajectory.stats['accepted']
        log_dict['rejected'] = runner.trajectory.stats['rejected']
        self._log_info(log_dict, runner)
        self._dump_log(log_dict)
        runner.log_buffer.clear_output()
