# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .builder import build_controller, build_platoon, build_topology
from .controllers import (BaseCruiseController, BaselineCruise,
                          BidirectionalCruise, accel_baseline,
                          accel_bidirectional, smooth_ramp, target_speed,
                          viscosity)
from .dynamics import Platoon, dynamics_rhs, prescribed_state
from .potentials import (PotentialSpec, potential_d1, potential_d2,
                         potential_value)
from .registry import CONTROLLERS, TOPOLOGIES
from .saturation import SaturationSpec, b_d1, b_value, beta
from .state import PlatoonState
from .topology import BaseTopology, ExtendedSpacings, OpenRoad, RingRoad

__all__ = [
    'CONTROLLERS', 'TOPOLOGIES', 'build_controller', 'build_topology',
    'build_platoon', 'PotentialSpec', 'potential_value', 'potential_d1',
    'potential_d2', 'SaturationSpec', 'b_value', 'b_d1', 'beta',
    'PlatoonState', 'BaseTopology', 'ExtendedSpacings', 'RingRoad',
    'OpenRoad', 'BaseCruiseController', 'BidirectionalCruise',
    'BaselineCruise', 'smooth_ramp', 'target_speed', 'viscosity',
    'accel_bidirectional', 'accel_baseline', 'Platoon', 'dynamics_rhs',
    'prescribed_state'
]
