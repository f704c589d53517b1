# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import io
import os.path as osp
from abc import ABCMeta, abstractmethod

from ...path import mkdir_or_exist


class BaseFileHandler(metaclass=ABCMeta):
    """Text codec for scenario files and run reports.

    Subclasses read and write file objects; paths are opened as UTF-8 text
    and missing parent directories of an output path are created, since run
    reports land in fresh output directories.
    """

    suffixes = ()

    @abstractmethod
    def load_from_fileobj(self, file, **kwargs):
        pass

    @abstractmethod
    def dump_to_fileobj(self, obj, file, **kwargs):
        pass

    def dump_to_str(self, obj, **kwargs):
        buf = io.StringIO()
        self.dump_to_fileobj(obj, buf, **kwargs)
        return buf.getvalue()

    def load_from_path(self, filepath, **kwargs):
        with open(filepath, 'r', encoding='utf-8') as f:
            return self.load_from_fileobj(f, **kwargs)

    def dump_to_path(self, obj, filepath, **kwargs):
        mkdir_or_exist(osp.dirname(osp.abspath(filepath)))
        with open(filepath, 'w', encoding='utf-8') as f:
            self.dump_to_fileobj(obj, f, **kwargs)
