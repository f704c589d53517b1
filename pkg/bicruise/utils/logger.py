# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
import logging
import os.path as osp

from .path import mkdir_or_exist

FORMAT_STR = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def get_root_logger(log_file=None, log_level=None):
    """Get the package logger.

    The logger is initialized on first use with a StreamHandler. If
    `log_file` is given, a FileHandler is attached as well, once per path.

    Args:
        log_file (str | None): The log filename.
        log_level (int | str | None): The logger level. None keeps the
            current level, INFO on first use.

    Returns:
        logging.Logger: The logger named "bicruise".
    """
    logger = logging.getLogger(__name__.split('.')[0])
    if not logger.handlers:
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(logging.Formatter(FORMAT_STR))
        logger.addHandler(stream_handler)
        logger.propagate = False
        logger.setLevel(logging.INFO)
    if log_level is not None:
        logger.setLevel(log_level)

    if log_file is not None:
        log_file = osp.abspath(log_file)
        known = [getattr(h, 'baseFilename', None) for h in logger.handlers]
        if log_file not in known:
            mkdir_or_exist(osp.dirname(log_file))
            file_handler = logging.FileHandler(log_file, 'w')
            file_handler.setFormatter(logging.Formatter(FORMAT_STR))
            logger.addHandler(file_handler)
    return logger


def print_log(msg, logger=None, level=logging.INFO):
    """Print a log message.

    Args:
        msg (str): The message to be logged.
        logger (logging.Logger | str | None): The logger to be used. Some
            special loggers are:
            - "root": the logger obtained with `get_root_logger()`.
            - "silent": no message will be printed.
            - None: The `print()` method will be used to print log messages.
        level (int): Logging level. Only available when `logger` is a Logger
            object or "root".
    """
    if logger is None:
        print(msg)
    elif logger == 'root':
        get_root_logger().log(level, msg)
    elif isinstance(logger, logging.Logger):
        logger.log(level, msg)
    elif logger != 'silent':
        raise TypeError(
            'logger should be either a logging.Logger object, "root", '
            '"silent" or None, but got {}'.format(logger))
