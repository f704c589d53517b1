# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Run the lab without installing the console script, e.g.

    python tools/lab.py verify ring-point --out-dir work_dirs/ring_point
"""
import os.path as osp
import sys

sys.path.insert(0, osp.dirname(osp.dirname(osp.abspath(__file__))))

from bicruise.cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
