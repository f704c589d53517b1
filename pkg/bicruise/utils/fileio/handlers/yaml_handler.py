# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import yaml

try:
    from yaml import CSafeLoader as Loader, CSafeDumper as Dumper
except ImportError:
    from yaml import SafeLoader as Loader, SafeDumper as Dumper

from .base import BaseFileHandler  # isort:skip


class YamlHandler(BaseFileHandler):
    """Scenario files are plain mappings, so only the safe loader is used."""

    suffixes = ('yaml', 'yml')

    def load_from_fileobj(self, file, **kwargs):
        kwargs.setdefault('Loader', Loader)
        return yaml.load(file, **kwargs)

    def dump_to_fileobj(self, obj, file, **kwargs):
        kwargs.setdefault('Dumper', Dumper)
        kwargs.setdefault('sort_keys', False)
        kwargs.setdefault('default_flow_style', None)
        yaml.dump(obj, file, **kwargs)
