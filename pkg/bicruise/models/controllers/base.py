# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from abc import ABCMeta, abstractmethod
from collections import namedtuple

from bicruise.utils import ConfigurationError
from ..potentials import PotentialSpec
from ..saturation import SaturationSpec

# Quantities shared by every control law, all vectors over vehicles 1..n
# except ``d1`` and ``d2`` which run over the extended spacings s_1..s_{n+1}.
Couplings = namedtuple(
    'Couplings', ['ext', 'd1', 'd2', 'grad_diff', 'target', 'v_prev', 'v_next'])


def _spec(cfg, spec_cls):
    if isinstance(cfg, spec_cls):
        return cfg
    if isinstance(cfg, dict):
        return spec_cls(**cfg)
    raise TypeError('expected a dict or {}, got {}'.format(
        spec_cls.__name__, type(cfg)))


class BaseCruiseController(metaclass=ABCMeta):
    """Base class for cruise control laws.

    Args:
        mu (float): Friction gain.
        potential (dict | PotentialSpec): Interaction potential.
        saturation (dict | SaturationSpec): Speed offset saturation.
    """

    law = None

    def __init__(self, mu, potential, saturation):
        mu = float(mu)
        if not mu > 0:
            raise ConfigurationError('mu must be positive, got {}'.format(mu))
        self.mu = mu
        self.potential = _spec(potential, PotentialSpec)
        self.saturation = _spec(saturation, SaturationSpec)

    @property
    def v_star(self):
        return self.saturation.v_star

    @property
    def v_max(self):
        return self.saturation.v_max

    def couplings(self, state, topology):
        ext = topology.extend(state.spacings)
        d1 = self.potential.d1(ext.values)
        d2 = self.potential.d2(ext.values)
        # V'(s_{i+1}) - V'(s_i)
        grad_diff = d1[1:] - d1[:-1]
        target = self.v_star - self.saturation.value(grad_diff)
        v_prev, v_next = topology.neighbor_speeds(state.speeds)
        return Couplings(ext, d1, d2, grad_diff, target, v_prev, v_next)

    def target_speeds(self, state, topology):
        return self.couplings(state, topology).target

    @abstractmethod
    def accelerations(self, state, topology, couplings=None):
        """Return the acceleration commands ``F_1..F_n``."""
        pass

    def to_dict(self):
        return dict(type=self.__class__.__name__,
                    mu=self.mu,
                    potential=self.potential.to_dict(),
                    saturation=self.saturation.to_dict())

    def __repr__(self):
        return '{}(mu={!r}, potential={!r}, saturation={!r})'.format(
            self.__class__.__name__, self.mu, self.potential, self.saturation)
