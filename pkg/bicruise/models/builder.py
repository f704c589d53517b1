# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from bicruise.utils import build_from_cfg
from .dynamics import Platoon
from .registry import CONTROLLERS, TOPOLOGIES


def build_controller(cfg):
    return build_from_cfg(cfg, CONTROLLERS)


def build_topology(cfg):
    return build_from_cfg(cfg, TOPOLOGIES)


def build_platoon(topology, controller, n, disturbance=None):
    if isinstance(topology, dict):
        topology = build_topology(topology)
    if isinstance(controller, dict):
        controller = build_controller(controller)
    return Platoon(topology, controller, n, disturbance)
