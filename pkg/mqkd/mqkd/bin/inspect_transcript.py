#!/usr/bin/env python
"""Recompute the statistics and key digest of a saved session from its transcript."""
import pandas as pd

from mqkd.constants import ExitCode
from mqkd.harness.config import ConfigError
from mqkd.harness.reread import reread_report
from mqkd.opts import inspect_opts
from mqkd.protocol.transcript import read_transcript
from mqkd.utils.logging import init_logger_from_opts, logger
from mqkd.utils.parse import ArgumentParser
from mqkd.utils.report_manager import build_report_manager
from mqkd.utils.statistics import SessionStatistics


def inspect(opts):
    init_logger_from_opts(opts)
    try:
        ArgumentParser.validate_inspect_opts(opts)
        transcript = read_transcript(opts.transcript)
    except (ConfigError, ValueError, KeyError) as err:
        logger.error(f"Cannot read {opts.transcript}: {err}")
        return ExitCode.CONFIG_ERROR

    report_mgr = build_report_manager(opts)
    report_mgr.start()
    report = reread_report(transcript)
    report_mgr.report_session(report, SessionStatistics.from_records(transcript))
    print(pd.Series(report.to_dict()).to_string())
    return ExitCode.ABORTED if report.aborted else ExitCode.SUCCESS


def _get_parser():
    parser = ArgumentParser(description='mqkd_inspect', prog='mqkd inspect')
    inspect_opts(parser)
    return parser


def main(argv=None):
    parser = _get_parser()

    opts = parser.parse_args(argv)
    return inspect(opts)


if __name__ == "__main__":
    raise SystemExit(main())
