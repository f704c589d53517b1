# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import numpy as np

from bicruise.utils import ConfigurationError
from ..registry import CONTROLLERS
from .base import BaseCruiseController


def smooth_ramp(x, epsilon):
    """C1 piecewise quadratic ramp used by the baseline gain.

    ``0`` for ``x <= -eps``, ``(x + eps)^2 / (2 eps)`` on ``(-eps, 0)`` and
    ``(eps^2 + 2 eps x) / (2 eps)`` for ``x >= 0``.
    """
    x = np.asarray(x, dtype=np.float64)
    out = np.where(
        x <= -epsilon, 0.0,
        np.where(x < 0, (x + epsilon)**2, epsilon**2 + 2.0 * epsilon * x))
    out = out / (2.0 * epsilon)
    return float(out) if out.ndim == 0 else out


@CONTROLLERS.register_module()
class BaselineCruise(BaseCruiseController):
    """Comparison cruise controller with a constant desired speed.

        F_i = -k_i(s) (v_i - v*) + V'(s_i) - V'(s_{i+1})

    with the state dependent gain
    ``k_i = mu_tilde + v_max g(X_i) / (v* (v_max - v*)) - X_i / v*`` and
    ``X_i = V'(s_i) - V'(s_{i+1})``.

    Args:
        mu_tilde (float): Base friction gain.
        epsilon (float): Width of the quadratic part of ``g``.
    """

    law = 'baseline'

    def __init__(self, mu, potential, saturation, mu_tilde=None, epsilon=0.1):
        super(BaselineCruise, self).__init__(mu, potential, saturation)
        mu_tilde = self.mu if mu_tilde is None else float(mu_tilde)
        epsilon = float(epsilon)
        if not mu_tilde > 0:
            raise ConfigurationError('mu_tilde must be positive, got {}'.format(
                mu_tilde))
        if not epsilon > 0:
            raise ConfigurationError('epsilon must be positive, got {}'.format(
                epsilon))
        self.mu_tilde = mu_tilde
        self.epsilon = epsilon

    def gains(self, state, topology, couplings=None):
        c = couplings or self.couplings(state, topology)
        x = -c.grad_diff
        v_star, v_max = self.v_star, self.v_max
        return (self.mu_tilde +
                v_max * smooth_ramp(x, self.epsilon) / (v_star * (v_max - v_star))
                - x / v_star)

    def accelerations(self, state, topology, couplings=None):
        c = couplings or self.couplings(state, topology)
        k = self.gains(state, topology, c)
        return -k * (state.speeds - self.v_star) - c.grad_diff

    def to_dict(self):
        cfg = super(BaselineCruise, self).to_dict()
        cfg.update(mu_tilde=self.mu_tilde, epsilon=self.epsilon)
        return cfg
