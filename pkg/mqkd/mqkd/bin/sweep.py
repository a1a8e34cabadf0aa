#!/usr/bin/env python
"""Evaluate a grid of attack strategies."""
from mqkd.constants import ExitCode
from mqkd.harness.config import ConfigError
from mqkd.harness.sweep import ROW_COLUMNS, sweep_attacks
from mqkd.opts import sweep_opts
from mqkd.utils.logging import init_logger_from_opts, logger
from mqkd.utils.parse import ArgumentParser
from mqkd.utils.report_manager import build_report_manager


def sweep(opts):
    init_logger_from_opts(opts)
    try:
        grid = ArgumentParser.validate_sweep_opts(opts)
    except ConfigError as err:
        logger.error(f"Configuration error: {err}")
        return ExitCode.CONFIG_ERROR

    report_mgr = build_report_manager(opts)
    report_mgr.start()
    rows = sweep_attacks(grid, seed=opts.seed, n_rounds=opts.n_rounds, n_workers=opts.n_workers)
    frame = report_mgr.report_rows('sweep_row', rows)
    report_mgr.report_end('sweep')
    print(frame[ROW_COLUMNS].to_string(index=False))
    failed = int((frame['error'] != '').sum())
    if failed:
        logger.warning(f"{failed} of {len(rows)} sweep points failed")
    return ExitCode.SUCCESS


def _get_parser():
    parser = ArgumentParser(description='mqkd_sweep', prog='mqkd sweep')
    sweep_opts(parser)
    return parser


def main(argv=None):
    parser = _get_parser()

    opts = parser.parse_args(argv)
    return sweep(opts)


if __name__ == "__main__":
    raise SystemExit(main())
