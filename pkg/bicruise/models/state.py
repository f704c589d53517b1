# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from dataclasses import dataclass

import numpy as np

from bicruise.utils import ArgumentError


@dataclass(eq=False)
class PlatoonState:
    """A point ``(s_2..s_n, v_1..v_n)`` of the platoon state space.

    ``spacings[k]`` is the spacing ``s_{k+2}`` between vehicle ``k+2`` and
    its predecessor; ``speeds[k]`` is the speed of vehicle ``k+1``. On a ring
    the spacing ``s_1`` is not stored, it follows from the ring length.
    """

    spacings: np.ndarray
    speeds: np.ndarray

    def __post_init__(self):
        self.spacings = np.array(self.spacings, dtype=np.float64).reshape(-1)
        self.speeds = np.array(self.speeds, dtype=np.float64).reshape(-1)
        if self.speeds.size < 2:
            raise ArgumentError('a platoon needs at least 2 vehicles, got {}'.format(
                self.speeds.size))
        if self.spacings.size != self.speeds.size - 1:
            raise ArgumentError(
                'expected {} spacings for {} vehicles, got {}'.format(
                    self.speeds.size - 1, self.speeds.size, self.spacings.size))

    @property
    def n(self):
        return self.speeds.size

    def as_vector(self):
        """Flat layout ``concat(spacings, speeds)`` used by the integrators."""
        return np.concatenate([self.spacings, self.speeds])

    @classmethod
    def from_vector(cls, y, n):
        y = np.asarray(y, dtype=np.float64)
        return cls(spacings=y[:n - 1], speeds=y[n - 1:])

    def copy(self):
        return PlatoonState(self.spacings.copy(), self.speeds.copy())

    def allclose(self, other, atol=0.0, rtol=0.0):
        return (np.allclose(self.spacings, other.spacings, rtol=rtol, atol=atol)
                and np.allclose(self.speeds, other.speeds, rtol=rtol, atol=atol))
