#!/usr/bin/env python
"""Run one simulated session, distill its key and report the outcome."""
import pandas as pd

from mqkd.constants import ExitCode
from mqkd.harness.config import ConfigError
from mqkd.harness.experiment import execute_session
from mqkd.opts import run_opts
from mqkd.utils.logging import init_logger_from_opts, logger
from mqkd.utils.parse import ArgumentParser
from mqkd.utils.report_manager import build_report_manager


def run(opts):
    init_logger_from_opts(opts)
    try:
        config = ArgumentParser.validate_run_opts(opts)
    except ConfigError as err:
        logger.error(f"Configuration error: {err}")
        return ExitCode.CONFIG_ERROR

    report_mgr = build_report_manager(opts)
    report_mgr.start()
    report, _ = execute_session(config, report_mgr)
    report_mgr.report_end('run')
    print(pd.Series(report.to_dict()).to_string())
    if report.aborted:
        logger.warning(f"Session aborted ({report.abort_reason}): an adversary was detected")
        return ExitCode.ABORTED
    return ExitCode.SUCCESS


def _get_parser():
    parser = ArgumentParser(description='mqkd_run', prog='mqkd run')
    run_opts(parser)
    return parser


def main(argv=None):
    parser = _get_parser()

    opts = parser.parse_args(argv)
    return run(opts)


if __name__ == "__main__":
    raise SystemExit(main())
