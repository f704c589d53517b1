# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from collections import OrderedDict

import numpy as np


class LogBuffer(object):
    """Accumulates per-step scalars between two log lines."""

    def __init__(self):
        self.val_history = OrderedDict()
        self.output = OrderedDict()
        self.ready = False

    def clear(self):
        self.val_history.clear()
        self.clear_output()

    def clear_output(self):
        self.output.clear()
        self.ready = False

    def update(self, vars):
        assert isinstance(vars, dict)
        for key, var in vars.items():
            self.val_history.setdefault(key, []).append(var)

    def average(self, n=0):
        """Average latest n values or all values"""
        assert n >= 0
        for key, values in self.val_history.items():
            self.output[key] = float(np.mean(values[-n:]))
        self.ready = True
