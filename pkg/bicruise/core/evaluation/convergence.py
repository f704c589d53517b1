# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import numpy as np


def convergence_time(t, deviation, threshold):
    """First time after which ``deviation`` stays within ``threshold`` for
    the rest of the series.

    Returns:
        float | None: ``None`` when the last sample is still outside.
    """
    t = np.asarray(t, dtype=np.float64)
    deviation = np.asarray(deviation, dtype=np.float64)
    outside = np.nonzero(~(deviation <= threshold))[0]
    if outside.size == 0:
        return float(t[0]) if t.size else None
    last = outside[-1]
    if last == t.size - 1:
        return None
    return float(t[last + 1])
