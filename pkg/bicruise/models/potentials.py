# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Repulsive interaction potential and its closed-form derivatives.

The potential is

    V(s) = q (lambda - s)^4 / (s - L)^2    for L < s <= lambda
    V(s) = 0                               for s > lambda

and is evaluated in the factored form ``q u^4 / w^2`` with ``u = lambda - s``
and ``w = s - L``. An infinite spacing (open road boundary) is a valid input
for which the potential and both derivatives are exactly zero.
"""
import numpy as np

from bicruise.utils import ConfigurationError, DomainError


def _as_output(values, like):
    if np.ndim(like) == 0:
        return float(values)
    return values


class PotentialSpec(object):
    """Parameters of the interaction potential.

    Args:
        q (float): Repulsion gain.
        safety_distance (float): Safety distance ``L``; the potential blows
            up as the spacing approaches it from above.
        interaction_distance (float): Interaction distance ``lambda``; the
            potential vanishes for spacings at or above it.
    """

    def __init__(self, q, safety_distance, interaction_distance):
        q, L, lam = float(q), float(safety_distance), float(interaction_distance)
        if not q > 0:
            raise ConfigurationError('q must be positive, got {}'.format(q))
        if not lam > L > 0:
            raise ConfigurationError(
                'need interaction_distance > safety_distance > 0, got '
                'L={}, lambda={}'.format(L, lam))
        self.q = q
        self.safety_distance = L
        self.interaction_distance = lam

    def __repr__(self):
        return '{}(q={!r}, safety_distance={!r}, interaction_distance={!r})'.format(
            self.__class__.__name__, self.q, self.safety_distance,
            self.interaction_distance)

    def to_dict(self):
        return dict(q=self.q,
                    safety_distance=self.safety_distance,
                    interaction_distance=self.interaction_distance)

    def _split(self, s):
        s = np.asarray(s, dtype=np.float64)
        if np.any(~(s > self.safety_distance)):
            raise DomainError(
                'spacing must exceed the safety distance {}, got min {}'.format(
                    self.safety_distance, np.min(s)))
        active = s < self.interaction_distance
        u = np.where(active, self.interaction_distance - s, 0.0)
        w = np.where(active, s - self.safety_distance, 1.0)
        return s, active, u, w

    def value(self, s):
        s, active, u, w = self._split(s)
        out = np.where(active, self.q * u**4 / w**2, 0.0)
        return _as_output(out, s)

    def d1(self, s):
        s, active, u, w = self._split(s)
        out = np.where(active, -2.0 * self.q * u**3 * (2.0 * w + u) / w**3,
                       0.0)
        return _as_output(out, s)

    def d2(self, s):
        s, active, u, w = self._split(s)
        out = np.where(
            active,
            2.0 * self.q * u**2 * (6.0 * w**2 + 8.0 * u * w + 3.0 * u**2) /
            w**4, 0.0)
        return _as_output(out, s)

    def level_spacing(self, r, tol=1e-10, max_iter=200):
        """Solve ``V(c) = r`` for ``c`` in ``(L, lambda)`` by bisection.

        ``V`` is strictly decreasing on the interval, so the root is unique.
        """
        lo, hi = self.safety_distance, self.interaction_distance
        for _ in range(max_iter):
            mid = 0.5 * (lo + hi)
            if hi - lo <= tol:
                break
            if self.value(mid) > r:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)


def potential_value(s, spec):
    return spec.value(s)


def potential_d1(s, spec):
    return spec.d1(s)


def potential_d2(s, spec):
    return spec.d2(s)
