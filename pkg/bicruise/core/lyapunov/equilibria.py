# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Optional

import numpy as np

from bicruise.utils import ArgumentError

RING_CONTINUUM = 'RingContinuum'
RING_POINT = 'RingPoint'
OPEN_SET = 'OpenSet'


@dataclass(frozen=True)
class EquilibriumSet:
    """Set of closed-loop equilibria.

    ``RingContinuum``: all spacings (``s_1`` included) at least ``lambda``
    and all speeds ``v*``, for ``R >= n lambda``. ``RingPoint``: the single
    point ``(R/n, v*)`` for ``R < n lambda``. ``OpenSet``: spacings at least
    ``lambda`` and speeds ``v*`` on an open road.
    """

    kind: str
    n: int
    v_star: float
    interaction_distance: float
    length: Optional[float] = None

    @property
    def is_singleton(self):
        return self.kind == RING_POINT or (
            self.kind == RING_CONTINUUM and
            np.isclose(self.length, self.n * self.interaction_distance))


def equilibrium_set(topology, n, controller):
    lam = controller.potential.interaction_distance
    v_star = controller.v_star
    if not topology.is_ring:
        return EquilibriumSet(OPEN_SET, n, v_star, lam)
    kind = RING_CONTINUUM if topology.length >= n * lam else RING_POINT
    return EquilibriumSet(kind, n, v_star, lam, topology.length)


def _project_capped_box(p, lower, total):
    """Euclidean projection of ``p`` onto ``{x >= lower, sum(x) <= total}``.

    The solution is ``max(p - theta, lower)`` with ``theta >= 0`` the
    smallest shift meeting the sum constraint.
    """
    x = np.maximum(p, lower)
    if x.sum() <= total:
        return x
    excess = np.sort(p - lower)[::-1]
    budget = total - lower * p.size
    cumsum = np.cumsum(excess)
    k = np.arange(1, p.size + 1)
    thetas = (cumsum - budget) / k
    # largest k whose k-th largest excess is not below its shift
    rho = np.nonzero(excess >= thetas)[0][-1]
    theta = max(thetas[rho], 0.0)
    return np.maximum(p - theta, lower)


def dist_to_equilibrium(state, eq):
    """Euclidean distance from ``state`` to ``eq`` in the stored coordinates
    ``(s_2..s_n, v_1..v_n)``."""
    if state.n != eq.n:
        raise ArgumentError('state has {} vehicles, equilibrium set {}'.format(
            state.n, eq.n))
    s, v = state.spacings, state.speeds
    lam = eq.interaction_distance
    if eq.kind == RING_POINT:
        s_proj = np.full_like(s, eq.length / eq.n)
    elif eq.kind == OPEN_SET:
        s_proj = np.maximum(s, lam)
    elif eq.kind == RING_CONTINUUM:
        s_proj = _project_capped_box(s, lam, eq.length - lam)
    else:
        raise ArgumentError('unknown equilibrium set kind {}'.format(eq.kind))
    return float(np.sqrt(np.sum((s - s_proj)**2) + np.sum((v - eq.v_star)**2)))


def state_space_diameter_bound(n, controller):
    """Upper bound on the distance of any open-road state to the
    equilibrium set once spacings are clamped below ``lambda``:
    ``sqrt(n (v_max - v*)^2 + n v*^2 + n (lambda - L)^2)``."""
    v_star, v_max = controller.v_star, controller.v_max
    gap = controller.potential.interaction_distance - controller.potential.safety_distance
    return float(np.sqrt(n * (v_max - v_star)**2 + n * v_star**2 + n * gap**2))
