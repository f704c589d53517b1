# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import inspect
from functools import partial


class Registry(object):
    """Name -> class mapping used to build objects from config dicts.

    Classes register under their own ``__name__`` unless an explicit
    ``name`` is given, e.g. ``@CONTROLLERS.register_module()``.
    """

    def __init__(self, name):
        self._name = name
        self._module_dict = dict()

    def __repr__(self):
        return '{}(name={}, items={})'.format(self.__class__.__name__,
                                              self._name,
                                              list(self._module_dict.keys()))

    def __contains__(self, key):
        return key in self._module_dict

    @property
    def name(self):
        return self._name

    @property
    def module_dict(self):
        return self._module_dict

    def get(self, key):
        return self._module_dict.get(key, None)

    def _register_module(self, module_class, name=None, force=False):
        if not inspect.isclass(module_class):
            raise TypeError('module must be a class, but got {}'.format(
                type(module_class)))
        module_name = name or module_class.__name__
        if not force and module_name in self._module_dict:
            raise KeyError('{} is already registered in {}'.format(
                module_name, self.name))
        self._module_dict[module_name] = module_class

    def register_module(self, cls=None, name=None, force=False):
        if cls is None:
            return partial(self.register_module, name=name, force=force)
        self._register_module(cls, name=name, force=force)
        return cls


def build_from_cfg(cfg, registry, default_args=None):
    """Build an object from a config dict.

    Args:
        cfg (dict): Config dict. It must contain the key "type".
        registry (:obj:`Registry`): The registry to search the type from.
        default_args (dict, optional): Default initialization arguments.

    Returns:
        obj: The constructed object.
    """
    if not isinstance(cfg, dict) or 'type' not in cfg:
        raise TypeError('cfg must be a dict containing the key "type", '
                        'but got {}'.format(cfg))
    assert isinstance(default_args, dict) or default_args is None
    args = dict(cfg)
    obj_type = args.pop('type')
    if isinstance(obj_type, str):
        obj_cls = registry.get(obj_type)
        if obj_cls is None:
            raise KeyError('{} is not in the {} registry'.format(
                obj_type, registry.name))
    elif inspect.isclass(obj_type):
        obj_cls = obj_type
    else:
        raise TypeError('type must be a str or valid type, but got {}'.format(
            type(obj_type)))
    if default_args is not None:
        for name, value in default_args.items():
            args.setdefault(name, value)
    return obj_cls(**args)
