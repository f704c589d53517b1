# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from dataclasses import dataclass

import numpy as np

from bicruise.utils import ArgumentError, ConfigurationError


@dataclass(frozen=True)
class RateConstants:
    mu_n: float
    omega_bar: float
    g_frak: float


def _check_count(n):
    if int(n) != n or n < 2:
        raise ArgumentError('vehicle count must be an integer >= 2, got {}'.format(n))
    return int(n)


def mu_n(n):
    """Smallest nonzero eigenvalue of the cyclic second-difference form,
    ``2 (1 - cos(2 pi / n))``."""
    n = _check_count(n)
    return 2.0 * (1.0 - np.cos(2.0 * np.pi / n))


def oracle_mu_n(n, shift=5.0, tol=1e-14, max_iter=200000):
    """Compute :func:`mu_n` numerically by power iteration.

    The cyclic second-difference operator ``C x = 2x - x_{prev} - x_{next}``
    has spectrum in ``[0, 4]`` and kernel spanned by the ones vector.
    Iterating ``shift * I - C`` on the complement of that kernel converges to
    ``shift - mu_n``.
    """
    n = _check_count(n)
    x = np.arange(n, dtype=np.float64)
    x -= x.mean()
    x /= np.linalg.norm(x)
    rayleigh = None
    for _ in range(max_iter):
        y = shift * x - (2.0 * x - np.roll(x, 1) - np.roll(x, -1))
        y -= y.mean()
        current = float(x @ y)
        y /= np.linalg.norm(y)
        if rayleigh is not None and abs(current - rayleigh) < tol:
            rayleigh = current
            break
        rayleigh = current
        x = y
    return shift - rayleigh


def rate_omega_bar(controller, topology, n, g_frak=0.9):
    """Exponential rate ``min(mu, G^2 b'(0) V''(R/n) mu_n)`` for a ring with
    a unique equilibrium (``R < n lambda``)."""
    n = _check_count(n)
    if not 0 < g_frak < 1:
        raise ArgumentError('g_frak must lie in (0, 1), got {}'.format(g_frak))
    if not topology.is_ring:
        raise ConfigurationError('the exponential rate is defined on a ring road')
    if not topology.length < n * controller.potential.interaction_distance:
        raise ConfigurationError(
            'need R < n * lambda for a unique equilibrium, got R={} n={} '
            'lambda={}'.format(topology.length, n,
                               controller.potential.interaction_distance))
    spectral = mu_n(n)
    curvature = controller.potential.d2(topology.length / n)
    slope = controller.saturation.d1(0.0)
    omega = min(controller.mu, g_frak**2 * slope * curvature * spectral)
    return RateConstants(mu_n=spectral, omega_bar=float(omega),
                         g_frak=float(g_frak))
