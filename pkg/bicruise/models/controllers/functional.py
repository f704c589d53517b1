# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Per-vehicle accessors for the control laws.

Vehicles are numbered ``1..n``. Each function evaluates the vectorized law
and picks one component, so they are meant for inspection and tests rather
than for the integration loop.
"""
from bicruise.utils import ArgumentError, ConfigurationError
from .baseline import BaselineCruise
from .bidirectional import BidirectionalCruise


def _index(i, state):
    if not 1 <= i <= state.n:
        raise ArgumentError('vehicle index must be in 1..{}, got {}'.format(
            state.n, i))
    return i - 1


def target_speed(i, state, topology, controller):
    return float(controller.target_speeds(state, topology)[_index(i, state)])


def viscosity(i, state, topology, controller):
    if not isinstance(controller, BidirectionalCruise):
        raise ConfigurationError('viscosity is defined for BidirectionalCruise only')
    return float(controller.viscosity(state, topology)[_index(i, state)])


def accel_bidirectional(i, state, topology, controller):
    if not isinstance(controller, BidirectionalCruise):
        raise ConfigurationError('expected a BidirectionalCruise controller')
    return float(controller.accelerations(state, topology)[_index(i, state)])


def accel_baseline(i, state, topology, controller):
    if not isinstance(controller, BaselineCruise):
        raise ConfigurationError('expected a BaselineCruise controller')
    return float(controller.accelerations(state, topology)[_index(i, state)])
