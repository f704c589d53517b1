# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import os.path as osp
from collections import OrderedDict

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from bicruise.utils import mkdir_or_exist  # noqa: E402

FLOAT_FORMAT = '%.17g'


def spacing_labels(trajectory):
    first = 1 if trajectory.is_ring else 2
    return ['s_{}'.format(i) for i in range(first, trajectory.n + 1)]


def trajectory_columns(trajectory):
    """Column names of the trajectory CSV; they depend only on the topology
    and on which Lyapunov diagnostics apply."""
    n = trajectory.n
    cols = ['t'] + spacing_labels(trajectory)
    cols += ['v_{}'.format(i) for i in range(1, n + 1)]
    cols += ['F_{}'.format(i) for i in range(1, n + 1)]
    cols.append('H')
    if trajectory.U is not None:
        cols.append('U')
    if trajectory.hdot is not None:
        cols.append('Hdot')
    cols.append('min_spacing')
    return cols


def trajectory_frame(trajectory):
    data = OrderedDict(t=trajectory.t)
    for label, col in zip(spacing_labels(trajectory),
                          trajectory.full_spacings().T):
        data[label] = col
    for i in range(trajectory.n):
        data['v_{}'.format(i + 1)] = trajectory.speeds[:, i]
    for i in range(trajectory.n):
        data['F_{}'.format(i + 1)] = trajectory.accels[:, i]
    data['H'] = trajectory.H
    if trajectory.U is not None:
        data['U'] = trajectory.U
    if trajectory.hdot is not None:
        data['Hdot'] = trajectory.hdot
    data['min_spacing'] = trajectory.min_spacing
    return pd.DataFrame(data, columns=trajectory_columns(trajectory))


def _relative_log(values):
    values = np.asarray(values, dtype=np.float64)
    with np.errstate(divide='ignore', invalid='ignore'):
        out = np.log(values / values[0])
    out[~np.isfinite(out)] = np.nan
    return out


def diagnostics_frame(trajectory):
    data = OrderedDict(t=trajectory.t, H=trajectory.H)
    if trajectory.U is not None:
        data['U'] = trajectory.U
    if trajectory.hdot is not None:
        data['Hdot'] = trajectory.hdot
    data['min_spacing'] = trajectory.min_spacing
    data['max_abs_F'] = trajectory.max_abs_accel
    data['log_H_rel'] = _relative_log(trajectory.H)
    if trajectory.U is not None:
        data['log_U_rel'] = _relative_log(trajectory.U)
    return pd.DataFrame(data)


def plot_frames(trajectory, v_star, disturbed=False):
    """Series files for the figures a run reproduces, keyed by name."""
    t = trajectory.t
    frames = OrderedDict()
    speeds = OrderedDict(t=t)
    for i in range(trajectory.n):
        speeds['v_{}'.format(i + 1)] = trajectory.speeds[:, i]
    frames['speeds'] = pd.DataFrame(speeds)
    spacings = OrderedDict(t=t)
    for label, col in zip(spacing_labels(trajectory),
                          trajectory.full_spacings().T):
        spacings[label] = col
    frames['spacings'] = pd.DataFrame(spacings)
    accels = OrderedDict(t=t, max_abs_F=trajectory.max_abs_accel)
    for i in range(trajectory.n):
        accels['F_{}'.format(i + 1)] = trajectory.accels[:, i]
    frames['accelerations'] = pd.DataFrame(accels)
    with np.errstate(divide='ignore'):
        lyap = OrderedDict(t=t, log_H=np.log(trajectory.H))
        if trajectory.U is not None:
            lyap['log_U'] = np.log(np.where(trajectory.U > 0, trajectory.U, np.nan))
    frames['lyapunov'] = pd.DataFrame(lyap).replace([np.inf, -np.inf], np.nan)
    if disturbed:
        deviation = OrderedDict(t=t)
        for i in range(trajectory.n):
            deviation['dv_{}'.format(i + 1)] = np.abs(trajectory.speeds[:, i] - v_star)
        frames['speed_deviation'] = pd.DataFrame(deviation)
    return frames


def write_csv(frame, filename):
    mkdir_or_exist(osp.dirname(osp.abspath(filename)))
    frame.to_csv(filename, index=False, float_format=FLOAT_FORMAT)
    return filename


def render_plot(frame, filename, title=None):
    """Static line chart of every column of ``frame`` against ``t``."""
    fig, ax = plt.subplots(1, figsize=(8, 4.5), tight_layout=True)
    for col in frame.columns:
        if col == 't':
            continue
        ax.plot(frame['t'], frame[col], label=col, linewidth=1.0)
    ax.set_xlabel('t [s]')
    if title:
        ax.set_title(title)
    if frame.shape[1] <= 13:
        ax.legend(loc='best', fontsize='small')
    ax.grid(True, alpha=0.3)
    fig.savefig(filename, dpi=100)
    plt.close(fig)
    return filename


def emit_run(trajectory, out_dir, v_star, disturbed=False, plots=True):
    """Write trajectory, diagnostics and plot-data files into ``out_dir``.

    Returns:
        dict: Name -> path of every file written.
    """
    mkdir_or_exist(out_dir)
    files = OrderedDict()
    files['trajectory'] = write_csv(trajectory_frame(trajectory),
                                    osp.join(out_dir, 'trajectory.csv'))
    files['diagnostics'] = write_csv(diagnostics_frame(trajectory),
                                     osp.join(out_dir, 'diagnostics.csv'))
    plot_dir = osp.join(out_dir, 'plots')
    for name, frame in plot_frames(trajectory, v_star, disturbed).items():
        files['plot_' + name] = write_csv(frame,
                                          osp.join(plot_dir, name + '.csv'))
        if plots:
            files['png_' + name] = render_plot(
                frame, osp.join(plot_dir, name + '.png'), title=name)
    return files
