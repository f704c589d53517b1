# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from abc import ABCMeta, abstractmethod

import numpy as np

from bicruise.utils import ConfigurationError, DomainError
from .registry import TOPOLOGIES


class ExtendedSpacings(object):
    """The full spacing vector ``s_1..s_{n+1}`` after boundary closure.

    ``values[0]`` is ``s_1`` and ``values[n]`` is ``s_{n+1}``.
    """

    def __init__(self, values):
        self.values = np.asarray(values, dtype=np.float64)

    def __len__(self):
        return self.values.size

    def __getitem__(self, item):
        return self.values[item]

    @property
    def interior(self):
        """Spacings ``s_2..s_n``."""
        return self.values[1:-1]

    @property
    def first(self):
        return float(self.values[0])

    def closure_error(self, length):
        """``s_1 + sum(s_2..s_n) - R``; zero up to rounding on a ring."""
        return float(self.values[0] + np.sum(self.interior) - length)


class BaseTopology(metaclass=ABCMeta):
    """Boundary conventions of the road the platoon drives on."""

    is_ring = False

    @abstractmethod
    def extend(self, spacings):
        pass

    @abstractmethod
    def neighbor_speeds(self, speeds):
        """Return ``(v_prev, v_next)`` with ``v_prev[k] = v_{k}`` and
        ``v_next[k] = v_{k+2}`` in 1-based vehicle numbering."""
        pass

    @abstractmethod
    def potential_spacings(self, ext):
        """Spacings whose potentials enter the Lyapunov function."""
        pass

    @abstractmethod
    def to_dict(self):
        pass

    def validate(self, n, potential):
        if n < 2:
            raise ConfigurationError('need at least 2 vehicles, got {}'.format(n))

    def check_state(self, state, potential, v_max):
        """Raise :class:`DomainError` unless the state lies in the open
        state space."""
        ext = self.extend(state.spacings)
        spacing = ext.values if self.is_ring else ext.interior
        if np.any(~(spacing > potential.safety_distance)):
            raise DomainError('spacing {} at or below the safety distance {}'.format(
                float(np.min(spacing)), potential.safety_distance))
        v = state.speeds
        if np.any(~((v > 0) & (v < v_max))):
            raise DomainError('speeds must lie in (0, {}), got min {} max {}'.format(
                v_max, float(np.min(v)), float(np.max(v))))

    def contains(self, state, potential, v_max):
        try:
            self.check_state(state, potential, v_max)
        except DomainError:
            return False
        return True


@TOPOLOGIES.register_module()
class RingRoad(BaseTopology):
    """Ring road of length ``R``: ``s_1 = s_{n+1} = R - sum(s_2..s_n)``,
    ``v_0 = v_n`` and ``v_{n+1} = v_1``."""

    is_ring = True

    def __init__(self, length):
        length = float(length)
        if not length > 0:
            raise ConfigurationError('ring length must be positive, got {}'.format(
                length))
        self.length = length

    def __repr__(self):
        return 'RingRoad(length={!r})'.format(self.length)

    def to_dict(self):
        return dict(type='RingRoad', length=self.length)

    def validate(self, n, potential):
        super(RingRoad, self).validate(n, potential)
        if not self.length > n * potential.safety_distance:
            raise ConfigurationError(
                'ring length {} must exceed n * L = {}'.format(
                    self.length, n * potential.safety_distance))

    def extend(self, spacings):
        spacings = np.asarray(spacings, dtype=np.float64)
        s1 = self.length - np.sum(spacings)
        return ExtendedSpacings(np.concatenate([[s1], spacings, [s1]]))

    def neighbor_speeds(self, speeds):
        return np.roll(speeds, 1), np.roll(speeds, -1)

    def potential_spacings(self, ext):
        return ext.values[:-1]

    def uniform_spacing(self, n):
        return self.length / n


@TOPOLOGIES.register_module()
class OpenRoad(BaseTopology):
    """Open road: ``s_1 = s_{n+1} = +inf`` so the boundary couplings vanish."""

    def __repr__(self):
        return 'OpenRoad()'

    def to_dict(self):
        return dict(type='OpenRoad')

    def extend(self, spacings):
        spacings = np.asarray(spacings, dtype=np.float64)
        return ExtendedSpacings(np.concatenate([[np.inf], spacings, [np.inf]]))

    def neighbor_speeds(self, speeds):
        # boundary neighbours mirror the vehicle itself; their couplings are
        # multiplied by V'' at infinity, which is zero
        v_prev = np.concatenate([speeds[:1], speeds[:-1]])
        v_next = np.concatenate([speeds[1:], speeds[-1:]])
        return v_prev, v_next

    def potential_spacings(self, ext):
        return ext.interior
