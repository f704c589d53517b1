# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import numpy as np

from .state import PlatoonState


def prescribed_state(state, t, disturbance=None):
    """Return ``state`` with vehicle 1's speed replaced by the prescribed
    disturbance signal at time ``t`` (unchanged when there is none)."""
    if disturbance is None:
        return state
    speeds = state.speeds.copy()
    speeds[0] = disturbance.signal(t)
    return PlatoonState(state.spacings, speeds)


def dynamics_rhs(state, topology, controller, t=0.0, disturbance=None):
    """Closed-loop right-hand side.

    ``ds_i/dt = v_{i-1} - v_i`` for ``i = 2..n`` and ``dv_i/dt = F_i``. With
    a disturbance, vehicle 1 follows the prescribed signal: its speed enters
    the spacing rates and its neighbours' controllers, and ``dv_1/dt`` is 0.

    Returns:
        ndarray: Time derivative in the ``PlatoonState.as_vector`` layout.
    """
    state = prescribed_state(state, t, disturbance)
    accel = controller.accelerations(state, topology)
    if disturbance is not None:
        accel = accel.copy()
        accel[0] = 0.0
    v = state.speeds
    return np.concatenate([v[:-1] - v[1:], accel])


class Platoon(object):
    """A topology, a control law and an optional disturbance bound together.

    This is the object the integrators advance; ``rhs(t, y)`` works on the
    flat state vector.
    """

    def __init__(self, topology, controller, n, disturbance=None):
        topology.validate(n, controller.potential)
        self.topology = topology
        self.controller = controller
        self.n = n
        self.disturbance = disturbance

    @property
    def v_max(self):
        return self.controller.v_max

    def state(self, y):
        return PlatoonState.from_vector(y, self.n)

    def rhs(self, t, y):
        return dynamics_rhs(self.state(y), self.topology, self.controller, t,
                            self.disturbance)

    def observed(self, t, y):
        """State as recorded: vehicle 1's speed is the prescribed signal."""
        return prescribed_state(self.state(y), t, self.disturbance)

    def admissible(self, t, y):
        return self.topology.contains(self.observed(t, y),
                                      self.controller.potential, self.v_max)

    def accelerations(self, t, y):
        state = self.observed(t, y)
        accel = self.controller.accelerations(state, self.topology)
        if self.disturbance is not None:
            accel = accel.copy()
            accel[0] = self.disturbance.derivative(t)
        return accel
