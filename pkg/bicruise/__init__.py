# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
__version__ = '0.1.0'
