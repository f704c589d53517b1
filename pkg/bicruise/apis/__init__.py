# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .emit import (diagnostics_frame, emit_run, plot_frames, trajectory_columns,
                   trajectory_frame)
from .presets import list_presets, preset, resolve_scenario
from .runner import (EXIT_INTEGRATION_FAILED, EXIT_INVALID_INPUT, EXIT_OK,
                     EXIT_VERIFY_FAILED, RunReport, compute_metrics,
                     print_sweep_summary, simulate, sweep, verify)
from .scenario import SWEEP_AXES, Scenario, dump_scenario, load_scenario

__all__ = [
    'Scenario', 'load_scenario', 'dump_scenario', 'SWEEP_AXES', 'preset',
    'list_presets', 'resolve_scenario', 'trajectory_columns',
    'trajectory_frame', 'diagnostics_frame', 'plot_frames', 'emit_run',
    'RunReport', 'compute_metrics', 'simulate', 'verify', 'sweep',
    'print_sweep_summary', 'EXIT_OK', 'EXIT_VERIFY_FAILED',
    'EXIT_INVALID_INPUT', 'EXIT_INTEGRATION_FAILED'
]
