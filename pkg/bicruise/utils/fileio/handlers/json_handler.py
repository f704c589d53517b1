# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import json

import numpy as np

from .base import BaseFileHandler


def _default(obj):
    # numpy scalars and arrays show up in run reports
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError('{} is not JSON serializable'.format(type(obj)))


class JsonHandler(BaseFileHandler):

    suffixes = ('json', )

    def load_from_fileobj(self, file):
        return json.load(file)

    def dump_to_fileobj(self, obj, file, **kwargs):
        kwargs.setdefault('default', _default)
        json.dump(obj, file, **kwargs)
