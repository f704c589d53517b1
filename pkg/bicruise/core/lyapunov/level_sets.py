# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from dataclasses import dataclass

import numpy as np

from bicruise.utils import ArgumentError


@dataclass(frozen=True)
class LevelSetBounds:
    """Bounds valid on the sublevel set ``{H <= r}`` of a ring platoon:
    every spacing is at least ``c`` and every speed lies in
    ``[v_lower, v_upper]``."""

    r: float
    c: float
    v_lower: float
    v_upper: float

    def contains(self, state, topology):
        ext = topology.extend(state.spacings)
        spacing = ext.values if topology.is_ring else ext.interior
        v = state.speeds
        return bool(
            np.all(spacing >= self.c) and np.all(v >= self.v_lower)
            and np.all(v <= self.v_upper))


def level_set_bounds(r, controller, tol=1e-10, max_iter=200):
    """Spacing and speed bounds on the sublevel set ``{H <= r}``.

    ``c`` solves ``V(c) = r`` by bisection. With ``b`` the saturation and
    ``V'`` taken at ``c``:

        v_lower = v_max (v* - b(-V'(c)))^2 / (v_max^2 + r + sqrt(r^2 + 2 r v_max^2))
        v_upper = v_max (v_max f + r + sqrt(r^2 + 2 r f (v_max - f))) / (v_max^2 + 2 r)

    where ``f = v* - b(V'(c))``.
    """
    r = float(r)
    if not r > 0:
        raise ArgumentError('level r must be positive, got {}'.format(r))
    potential, saturation = controller.potential, controller.saturation
    v_star, v_max = saturation.v_star, saturation.v_max

    c = potential.level_spacing(r, tol=tol, max_iter=max_iter)
    grad = potential.d1(c)

    f_low = v_star - saturation.value(-grad)
    v_lower = v_max * f_low**2 / (v_max**2 + r + np.sqrt(r**2 + 2.0 * r * v_max**2))

    f_high = v_star - saturation.value(grad)
    v_upper = v_max * (v_max * f_high + r + np.sqrt(
        r**2 + 2.0 * r * f_high * (v_max - f_high))) / (v_max**2 + 2.0 * r)
    return LevelSetBounds(r=r, c=float(c), v_lower=float(v_lower),
                          v_upper=float(v_upper))
