# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .handlers import BaseFileHandler, JsonHandler, YamlHandler
from .io import dump, load

__all__ = [
    'load', 'dump', 'BaseFileHandler', 'JsonHandler',
    'YamlHandler'
]
