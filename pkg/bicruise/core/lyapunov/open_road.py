# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Closed-form guarantees for the bidirectional law on an open road."""
from dataclasses import dataclass

import numpy as np

from bicruise.models import OpenRoad
from .functions import lyapunov_H

_OPEN_ROAD = OpenRoad()


def prop2_bound(initial_state, controller):
    """Per-spacing ceiling that bounds ``s_i(t)`` for all ``t >= 0``.

    ``max(s_i(0), lambda) + v_max sqrt(2 H_S(0)) / (2 mu min(v*, v_max - v*))``
    for ``i = 2..n``.
    """
    H = lyapunov_H(initial_state, _OPEN_ROAD, controller)
    v_star, v_max = controller.v_star, controller.v_max
    slack = v_max * np.sqrt(2.0 * H) / (
        2.0 * controller.mu * min(v_star, v_max - v_star))
    lam = controller.potential.interaction_distance
    return np.maximum(initial_state.spacings, lam) + slack


@dataclass(frozen=True)
class ExponentialRegime:
    """Outcome of the exponential-regime premise check.

    When ``premise_holds``, every speed satisfies
    ``|v_i(t) - v*| <= speed_envelope(t)`` and every spacing stays at or above
    ``spacing_floor`` for all ``t >= 0``.
    """

    premise_holds: bool
    gamma: float
    required_spacing: float
    spacing_floor: float
    v_max: float
    mu: float

    def speed_envelope(self, t):
        return 0.5 * self.v_max * self.gamma * np.exp(-self.mu * np.asarray(t))


def prop3_check(initial_state, controller):
    """Check the premise ``min s_i(0) >= lambda + (v_max / mu) Gamma`` with
    ``Gamma = max |v_i - f_i| / sqrt((v_max - v_i) v_i)`` at ``t = 0``."""
    v = initial_state.speeds
    v_max, mu = controller.v_max, controller.mu
    target = controller.target_speeds(initial_state, _OPEN_ROAD)
    gamma = float(np.max(np.abs(v - target) / np.sqrt((v_max - v) * v)))
    lam = controller.potential.interaction_distance
    required = lam + v_max / mu * gamma
    holds = bool(np.min(initial_state.spacings) >= required)
    return ExponentialRegime(premise_holds=holds,
                             gamma=gamma,
                             required_spacing=float(required),
                             spacing_floor=lam,
                             v_max=v_max,
                             mu=mu)
