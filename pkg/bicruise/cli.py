# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Command line entry point: ``bicruise simulate|verify|sweep|preset``."""
import argparse
import logging
import os.path as osp
import sys
import time

from bicruise import __version__
from bicruise.apis import (EXIT_INTEGRATION_FAILED, EXIT_INVALID_INPUT, EXIT_OK,
                           SWEEP_AXES, dump_scenario, list_presets, preset,
                           simulate, sweep, verify)
from bicruise.utils import BicruiseError, get_root_logger


def _add_run_args(parser):
    parser.add_argument('scenario', help='scenario file or preset name')
    parser.add_argument('--out-dir', help='directory for CSV, plot and report files')
    parser.add_argument('--stride', type=float, help='output sample stride')
    parser.add_argument('--t-end', type=float, help='simulation horizon')
    parser.add_argument('--method', choices=['RK4Fixed', 'RK45Adaptive'],
                        help='integrator')
    parser.add_argument('--rtol', type=float, help='relative tolerance (RK45Adaptive)')
    parser.add_argument('--atol', type=float, help='absolute tolerance (RK45Adaptive)')
    parser.add_argument('--quiet', action='store_true', help='only log warnings')
    parser.add_argument('--log-interval', type=int,
                        help='log integration progress every N accepted steps')


def _values(text):
    if not text.strip():
        return []
    return [float(v) for v in text.split(',') if v.strip()]


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        prog='bicruise', description='Cruise-control platoon simulation lab')
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    sim_parser = subparsers.add_parser('simulate', help='run one scenario')
    _add_run_args(sim_parser)
    sim_parser.add_argument('--no-plots', action='store_true',
                            help='skip PNG rendering')

    verify_parser = subparsers.add_parser(
        'verify', help='run one scenario and check its acceptance thresholds')
    _add_run_args(verify_parser)
    verify_parser.add_argument('--no-plots', action='store_true',
                               help='skip PNG rendering')

    sweep_parser = subparsers.add_parser('sweep', help='sweep one parameter')
    _add_run_args(sweep_parser)
    sweep_parser.add_argument('--axis', required=True, choices=SWEEP_AXES)
    sweep_parser.add_argument('--values', type=_values, required=True,
                              help='comma separated values, e.g. 0.05,0.1,0.2')
    sweep_parser.add_argument('--nproc', type=int, default=1,
                              help='number of worker processes')

    preset_parser = subparsers.add_parser('preset', help='list or print presets')
    preset_parser.add_argument('name', nargs='?', help='preset to print as YAML')
    preset_parser.add_argument('--list', action='store_true', help='list preset names')
    return parser.parse_args(argv)


def _overrides(args):
    return dict(t_end=args.t_end,
                sample_stride=args.stride,
                method=args.method,
                rtol=args.rtol,
                atol=args.atol)


def _logger(args):
    level = logging.WARNING if getattr(args, 'quiet', False) else logging.INFO
    log_file = None
    if getattr(args, 'out_dir', None):
        timestamp = time.strftime('%Y%m%d_%H%M%S', time.localtime())
        log_file = osp.join(args.out_dir, '{}.log'.format(timestamp))
    return get_root_logger(log_file=log_file, log_level=level)


def _run(args):
    if args.command == 'preset':
        if args.list or not args.name:
            for name in list_presets():
                print(name)
        else:
            print(dump_scenario(preset(args.name)), end='')
        return EXIT_OK

    logger = _logger(args)
    if args.command == 'simulate':
        report = simulate(args.scenario, out_dir=args.out_dir,
                          overrides=_overrides(args), logger=logger,
                          plots=not args.no_plots, log_interval=args.log_interval)
        if not report.completed:
            return EXIT_INTEGRATION_FAILED
        return EXIT_OK
    if args.command == 'verify':
        report = verify(args.scenario, out_dir=args.out_dir,
                        overrides=_overrides(args), logger=logger,
                        plots=not args.no_plots)
        return report.exit_code
    sweep(args.scenario, args.axis, args.values, nproc=args.nproc,
          out_dir=args.out_dir, overrides=_overrides(args), logger=logger)
    return EXIT_OK


def main(argv=None):
    args = parse_args(argv)
    try:
        return _run(args)
    except (BicruiseError, KeyError, SyntaxError, IOError) as e:
        get_root_logger().error('{}: {}'.format(type(e).__name__, e))
        return EXIT_INVALID_INPUT


if __name__ == '__main__':
    sys.exit(main())
