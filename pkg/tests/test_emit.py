# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import os.path as osp

import numpy as np
import pandas as pd
import pytest

from bicruise.apis import (diagnostics_frame, emit_run, plot_frames, preset,
                           trajectory_columns, trajectory_frame)
from bicruise.sim import integrate


def _short(name, t_end=1.0):
    return integrate(preset(name).with_overrides(t_end=t_end, sample_stride=0.5))


def test_ring_point_columns():
    assert trajectory_columns(_short('ring-point')) == [
        't', 's_1', 's_2', 's_3', 's_4', 'v_1', 'v_2', 'v_3', 'v_4', 'F_1',
        'F_2', 'F_3', 'F_4', 'H', 'U', 'Hdot', 'min_spacing'
    ]


def test_ring_continuum_columns():
    assert trajectory_columns(_short('ring-continuum')) == [
        't', 's_1', 's_2', 's_3', 's_4', 'v_1', 'v_2', 'v_3', 'v_4', 'F_1',
        'F_2', 'F_3', 'F_4', 'H', 'Hdot', 'min_spacing'
    ]


def test_baseline_columns():
    assert trajectory_columns(_short('open-road-compare-73')) == [
        't', 's_2', 's_3', 's_4', 's_5', 'v_1', 'v_2', 'v_3', 'v_4', 'v_5',
        'F_1', 'F_2', 'F_3', 'F_4', 'F_5', 'H', 'min_spacing'
    ]


def test_trajectory_frame_values():
    traj = _short('ring-point')
    frame = trajectory_frame(traj)
    assert list(frame.columns) == trajectory_columns(traj)
    np.testing.assert_allclose(frame['t'], [0.0, 0.5, 1.0])
    assert frame['s_1'].iloc[0] == 38.0
    np.testing.assert_allclose(frame[['s_1', 's_2', 's_3', 's_4']].sum(axis=1),
                               130.0)
    np.testing.assert_array_equal(frame['H'], traj.H)


def test_diagnostics_frame():
    traj = _short('ring-point')
    frame = diagnostics_frame(traj)
    assert frame['log_H_rel'].iloc[0] == 0.0
    assert frame['log_U_rel'].iloc[0] == 0.0
    assert (frame['log_H_rel'].iloc[1:] <= 1e-9).all()
    assert 'log_U_rel' not in diagnostics_frame(_short('ring-continuum'))


def test_plot_frames():
    traj = _short('string-stability', t_end=2.0)
    frames = plot_frames(traj, 20.0, disturbed=True)
    assert list(frames) == [
        'speeds', 'spacings', 'accelerations', 'lyapunov', 'speed_deviation'
    ]
    assert list(frames['spacings'].columns) == ['t'] + [
        's_{}'.format(i) for i in range(1, 7)
    ]
    assert 'speed_deviation' not in plot_frames(traj, 20.0)


def test_emit_is_deterministic(tmp_path):
    scenario = preset('ring-point').with_overrides(t_end=2.0)
    first = emit_run(integrate(scenario), str(tmp_path / 'a'), 30.0, plots=False)
    second = emit_run(integrate(scenario), str(tmp_path / 'b'), 30.0, plots=False)
    assert list(first) == list(second)
    assert not any(name.startswith('png_') for name in first)
    for name in first:
        with open(first[name], 'rb') as f, open(second[name], 'rb') as g:
            assert f.read() == g.read()


def test_emit_writes_full_precision(tmp_path):
    traj = _short('ring-point')
    files = emit_run(traj, str(tmp_path), 30.0, plots=True)
    assert osp.isfile(files['png_speeds'])
    frame = pd.read_csv(files['trajectory'], float_precision='round_trip')
    # %.17g survives a text round trip bit for bit
    np.testing.assert_array_equal(frame['H'].to_numpy(), traj.H)
    with open(files['trajectory']) as f:
        assert f.readline().strip() == ','.join(trajectory_columns(traj))


@pytest.mark.parametrize('name', ['ring-point', 'prop3-regime'])
def test_emit_file_set(tmp_path, name):
    files = emit_run(_short(name), str(tmp_path), 30.0, plots=False)
    assert list(files) == [
        'trajectory', 'diagnostics', 'plot_speeds', 'plot_spacings',
        'plot_accelerations', 'plot_lyapunov'
    ]
