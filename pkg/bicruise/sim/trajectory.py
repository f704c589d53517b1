# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from enum import Enum

import numpy as np

from bicruise.models import PlatoonState


class TerminationReason(Enum):
    COMPLETED = 'Completed'
    STATE_SPACE_VIOLATION = 'StateSpaceViolation'
    STEP_UNDERFLOW = 'StepUnderflow'


class Trajectory(object):
    """Time-stamped platoon states with per-sample diagnostics.

    Samples are appended while integrating and frozen into arrays by
    :meth:`freeze`. ``spacings`` holds the stored spacings ``s_2..s_n``;
    on a ring ``ring_spacing`` holds the derived ``s_1``. ``U`` and ``hdot``
    are ``None`` when they do not apply to the scenario.
    """

    _FIELDS = ('t', 'spacings', 'speeds', 'accels', 'H', 'U', 'hdot',
               'ring_spacing', 'min_spacing', 'max_abs_accel')

    def __init__(self, n, ring_length=None, scenario_hash=None, settings=None):
        self.n = n
        self.ring_length = ring_length
        self.scenario_hash = scenario_hash
        self.settings = dict(settings or {})
        self.termination = TerminationReason.COMPLETED
        self.termination_time = None
        self.stats = dict(accepted=0, rejected=0, rhs_evals=0)
        self._buffers = {name: [] for name in self._FIELDS}
        self._frozen = False

    @property
    def is_ring(self):
        return self.ring_length is not None

    def append(self, t, state, accels, sample):
        """Record one sample.

        Args:
            t (float): Sample time.
            state (PlatoonState): State as observed at ``t``.
            accels (ndarray): Acceleration commands.
            sample (LyapunovSample): Lyapunov diagnostics at ``t``.
        """
        assert not self._frozen, 'trajectory is frozen'
        b = self._buffers
        b['t'].append(float(t))
        b['spacings'].append(state.spacings.copy())
        b['speeds'].append(state.speeds.copy())
        b['accels'].append(np.asarray(accels, dtype=np.float64).copy())
        b['H'].append(sample.H)
        b['U'].append(sample.U)
        b['hdot'].append(sample.hdot)
        min_spacing = float(np.min(state.spacings))
        if self.is_ring:
            s1 = self.ring_length - float(np.sum(state.spacings))
            b['ring_spacing'].append(s1)
            min_spacing = min(min_spacing, s1)
        b['min_spacing'].append(min_spacing)
        b['max_abs_accel'].append(float(np.max(np.abs(accels))))

    def freeze(self):
        b = self._buffers
        self.t = np.asarray(b['t'])
        size = self.t.size
        self.spacings = np.asarray(b['spacings']).reshape(size, self.n - 1)
        self.speeds = np.asarray(b['speeds']).reshape(size, self.n)
        self.accels = np.asarray(b['accels']).reshape(size, self.n)
        self.H = np.asarray(b['H'], dtype=np.float64)
        self.U = None if any(u is None for u in b['U']) or not b['U'] else \
            np.asarray(b['U'], dtype=np.float64)
        self.hdot = None if any(h is None for h in b['hdot']) or not b['hdot'] \
            else np.asarray(b['hdot'], dtype=np.float64)
        self.ring_spacing = np.asarray(b['ring_spacing']) if self.is_ring else None
        self.min_spacing = np.asarray(b['min_spacing'])
        self.max_abs_accel = np.asarray(b['max_abs_accel'])
        self._frozen = True
        return self

    def last_value(self, name):
        """Most recent recorded value of a diagnostic, frozen or not."""
        if self._frozen:
            return getattr(self, name)[-1]
        return self._buffers[name][-1]

    def __len__(self):
        return len(self.t) if self._frozen else len(self._buffers['t'])

    @property
    def completed(self):
        return self.termination is TerminationReason.COMPLETED

    def full_spacings(self):
        """Spacings as reported: ``s_1..s_n`` on a ring, ``s_2..s_n`` on an
        open road."""
        if self.is_ring:
            return np.column_stack([self.ring_spacing, self.spacings])
        return self.spacings

    def state(self, k):
        return PlatoonState(self.spacings[k], self.speeds[k])

    @property
    def final_state(self):
        return self.state(-1)
