# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from bicruise.utils import Registry

CONTROLLERS = Registry('controller')
TOPOLOGIES = Registry('topology')
