# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from ..registry import CONTROLLERS
from ..saturation import beta
from .base import BaseCruiseController


@CONTROLLERS.register_module()
class BidirectionalCruise(BaseCruiseController):
    """Bidirectional cruise controller with spacing-dependent target speeds.

    Each vehicle uses the spacing and speed of both its predecessor and its
    follower:

        F_i = (1 / beta(v_i, f_i)) * [(Z_i - mu v_max^2 (v_i - f_i))
              / (v_i (v_max - v_i)) + V'(s_i) - V'(s_{i+1})]

    where ``f_i`` is the target speed and ``Z_i`` the viscosity term.
    """

    law = 'bidirectional'

    def viscosity(self, state, topology, couplings=None):
        c = couplings or self.couplings(state, topology)
        v = state.speeds
        return -self.v_max**2 * self.saturation.d1(c.grad_diff) * (
            c.d2[1:] * (v - c.v_next) - c.d2[:-1] * (c.v_prev - v))

    def accelerations(self, state, topology, couplings=None):
        c = couplings or self.couplings(state, topology)
        v = state.speeds
        v_max = self.v_max
        gain = beta(v, c.target, v_max)
        z = self.viscosity(state, topology, c)
        bracket = (z - self.mu * v_max**2 * (v - c.target)) / (
            v * (v_max - v)) + c.d1[:-1] - c.d1[1:]
        return bracket / gain
