# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from collections import namedtuple
from dataclasses import dataclass
from typing import Optional

import numpy as np

from bicruise.models import BidirectionalCruise, PlatoonState, beta
from bicruise.utils import ConfigurationError


@dataclass
class LyapunovSample:
    H: float
    U: Optional[float] = None
    hdot: Optional[float] = None


QuadraticSandwich = namedtuple('QuadraticSandwich',
                               ['alpha_lower', 'alpha_upper', 'radii'])


def _kinetic_weights(speeds, v_max):
    return 1.0 / (speeds * (v_max - speeds))


def lyapunov_H(state, topology, controller, couplings=None):
    """Lyapunov function of the closed loop.

    ``(v_max^2 / 2) sum (v_i - f_i)^2 / (v_i (v_max - v_i))`` plus the sum of
    potentials: ``V(s_1..s_n)`` on a ring, ``V(s_2..s_n)`` on an open road.
    """
    c = couplings or controller.couplings(state, topology)
    v = state.speeds
    kinetic = 0.5 * controller.v_max**2 * np.sum(
        (v - c.target)**2 * _kinetic_weights(v, controller.v_max))
    potential = np.sum(
        controller.potential.value(topology.potential_spacings(c.ext)))
    return float(kinetic + potential)


def _require_unique_equilibrium(topology, n, controller):
    if not topology.is_ring:
        raise ConfigurationError('U is defined on a ring road only')
    if not topology.length < n * controller.potential.interaction_distance:
        raise ConfigurationError(
            'U needs R < n * lambda, got R={} n={} lambda={}'.format(
                topology.length, n, controller.potential.interaction_distance))


def lyapunov_U(state, topology, controller, couplings=None):
    """``H - n V(R / n)``; zero exactly at the uniform ring equilibrium."""
    n = state.n
    _require_unique_equilibrium(topology, n, controller)
    H = lyapunov_H(state, topology, controller, couplings)
    return H - n * controller.potential.value(topology.length / n)


def _require_bidirectional(controller):
    if not isinstance(controller, BidirectionalCruise):
        raise ConfigurationError(
            'closed-form dH/dt exists for BidirectionalCruise only, got {}'.format(
                controller.__class__.__name__))


def hdot_analytic(state, topology, controller, couplings=None):
    """Closed-form time derivative of H along the bidirectional closed loop.

    ``-mu v_max^2 sum (v_i - f_i)^2 / (v_i (v_max - v_i)) - sum b(D_i) D_i``
    with ``D_i = V'(s_{i+1}) - V'(s_i)``. Both sums are nonnegative, so the
    result is never positive.
    """
    _require_bidirectional(controller)
    c = couplings or controller.couplings(state, topology)
    v = state.speeds
    friction = controller.mu * controller.v_max**2 * np.sum(
        (v - c.target)**2 * _kinetic_weights(v, controller.v_max))
    coupling = np.sum(controller.saturation.value(c.grad_diff) * c.grad_diff)
    return float(-friction - coupling)


def hdot_chain_rule(state, topology, controller, couplings=None):
    """dH/dt assembled term by term from the chain rule.

    Uses the controller output ``F`` and the viscosity ``Z`` directly, so it
    is an independent check of the control law transcription against
    :func:`hdot_analytic`.
    """
    terms = hdot_chain_rule_terms(state, topology, controller, couplings)
    return float(sum(np.sum(t) for t in terms))


def hdot_chain_rule_terms(state, topology, controller, couplings=None):
    _require_bidirectional(controller)
    c = couplings or controller.couplings(state, topology)
    v, v_max = state.speeds, controller.v_max
    accel = controller.accelerations(state, topology, c)
    z = controller.viscosity(state, topology, c)
    # ds_i/dt = v_{i-1} - v_i; boundary terms vanish on an open road
    spacing_term = c.d1[:-1] * (c.v_prev - v)
    drive_term = (v - c.target) * beta(v, c.target, v_max) * accel
    viscous_term = -(v - c.target) * z * _kinetic_weights(v, v_max)
    return spacing_term, drive_term, viscous_term


def lyapunov_sample(state, topology, controller):
    c = controller.couplings(state, topology)
    H = lyapunov_H(state, topology, controller, c)
    U = None
    if topology.is_ring and topology.length < (
            state.n * controller.potential.interaction_distance):
        U = H - state.n * controller.potential.value(topology.length / state.n)
    hdot = None
    if isinstance(controller, BidirectionalCruise):
        hdot = hdot_analytic(state, topology, controller, c)
    return LyapunovSample(H=H, U=U, hdot=hdot)


def fit_quadratic_sandwich(topology, controller, n, radii=None, directions=32,
                           seed=0):
    """Fit constants ``a1 <= U / |x - x*|^2 <= a2`` near the ring equilibrium.

    ``x*`` is ``(R/n, ..., v*, ...)`` in the stored coordinates
    ``(s_2..s_n, v_1..v_n)``. Random unit directions are scaled by each
    radius; the ratio extremes over all sampled directions are returned.
    """
    _require_unique_equilibrium(topology, n, controller)
    if radii is None:
        radii = 0.5**np.arange(1, 9)
    rng = np.random.default_rng(seed)
    center = np.concatenate([np.full(n - 1, topology.length / n),
                             np.full(n, controller.v_star)])
    ratios = []
    for _ in range(directions):
        d = rng.standard_normal(2 * n - 1)
        d /= np.linalg.norm(d)
        for r in radii:
            state = PlatoonState.from_vector(center + r * d, n)
            ratios.append(lyapunov_U(state, topology, controller) / r**2)
    ratios = np.asarray(ratios)
    return QuadraticSandwich(float(ratios.min()), float(ratios.max()),
                             np.asarray(radii))
