# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .disturbance import DisturbanceSchedule, disturbance_signal
from .engine import Simulator, integrate, sample_grid
from .integrators import (INTEGRATORS, BaseIntegrator, RK4Fixed, RK45Adaptive,
                          build_integrator, hermite_interpolate)
from .monitors import (MONITORS, MonitorReport, MonitorResult,
                       print_monitor_summary, run_monitors)
from .trajectory import TerminationReason, Trajectory

__all__ = [
    'DisturbanceSchedule', 'disturbance_signal', 'Simulator', 'integrate',
    'sample_grid', 'INTEGRATORS', 'BaseIntegrator', 'RK4Fixed',
    'RK45Adaptive', 'build_integrator', 'hermite_interpolate', 'MONITORS',
    'MonitorReport', 'MonitorResult', 'print_monitor_summary', 'run_monitors',
    'TerminationReason', 'Trajectory'
]
