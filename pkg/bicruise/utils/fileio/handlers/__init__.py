# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .base import BaseFileHandler
from .json_handler import JsonHandler
from .yaml_handler import YamlHandler

__all__ = ['BaseFileHandler', 'JsonHandler', 'YamlHandler']
