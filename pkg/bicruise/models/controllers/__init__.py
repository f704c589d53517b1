# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .base import BaseCruiseController, Couplings
from .baseline import BaselineCruise, smooth_ramp
from .bidirectional import BidirectionalCruise
from .functional import (accel_baseline, accel_bidirectional, target_speed,
                         viscosity)

__all__ = [
    'BaseCruiseController', 'Couplings', 'BidirectionalCruise',
    'BaselineCruise', 'smooth_ramp', 'target_speed', 'viscosity',
    'accel_bidirectional', 'accel_baseline'
]
