# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import numpy as np
import pytest

from bicruise.apis import preset
from bicruise.models import (BaselineCruise, BidirectionalCruise, OpenRoad,
                             PlatoonState, RingRoad)

V_STAR = 30.0
V_MAX = 35.0
SAFETY = 5.0
RING_LENGTH = 130.0


def make_controller(lam=40.0, q=0.1, mu=0.1, v_star=V_STAR, v_max=V_MAX,
                    baseline=False):
    cfg = dict(mu=mu,
               potential=dict(q=q, safety_distance=SAFETY,
                              interaction_distance=lam),
               saturation=dict(v_star=v_star, v_max=v_max))
    if baseline:
        return BaselineCruise(mu_tilde=mu, epsilon=0.1, **cfg)
    return BidirectionalCruise(**cfg)


def random_ring_state(rng, n=4, length=RING_LENGTH, margin=1.0, v_max=V_MAX):
    """Uniformly spread spacings ``s_1..s_n`` above ``L + margin`` summing to
    ``length``; only ``s_2..s_n`` are stored."""
    free = length - n * (SAFETY + margin)
    full = SAFETY + margin + free * rng.dirichlet(np.ones(n))
    speeds = rng.uniform(1.0, v_max - 1.0, size=n)
    return PlatoonState(full[1:], speeds)


def random_open_state(rng, n=5, low=SAFETY + 1.0, high=60.0, v_max=V_MAX):
    return PlatoonState(rng.uniform(low, high, size=n - 1),
                        rng.uniform(1.0, v_max - 1.0, size=n))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def ring():
    return RingRoad(RING_LENGTH)


@pytest.fixture
def open_road():
    return OpenRoad()


@pytest.fixture
def point_controller():
    """R = 130 < 4 * 40: unique ring equilibrium at spacing 32.5."""
    return make_controller(lam=40.0)


@pytest.fixture
def continuum_controller():
    return make_controller(lam=30.0)


@pytest.fixture
def baseline_controller():
    return make_controller(lam=35.0, q=35.0**-3, baseline=True)


@pytest.fixture
def ring_point_scenario():
    return preset('ring-point')


@pytest.fixture
def short_ring_point():
    return preset('ring-point').with_overrides(t_end=5.0)
