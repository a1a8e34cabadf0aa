#!/usr/bin/env python
"""Print the comparison with the other mediated three-party protocols."""
from mqkd.constants import ExitCode
from mqkd.harness.comparison import comparison_report
from mqkd.harness.config import ConfigError
from mqkd.harness.experiment import execute_session
from mqkd.opts import report_opts
from mqkd.utils.logging import init_logger_from_opts, logger
from mqkd.utils.parse import ArgumentParser
from mqkd.utils.report_manager import build_report_manager


def report(opts):
    init_logger_from_opts(opts)
    try:
        config = ArgumentParser.validate_report_opts(opts)
    except ConfigError as err:
        logger.error(f"Configuration error: {err}")
        return ExitCode.CONFIG_ERROR

    report_mgr = build_report_manager(opts)
    report_mgr.start()
    session, _ = execute_session(config, report_mgr)
    report_mgr.report_end('report')
    print(comparison_report(report=session))
    return ExitCode.SUCCESS


def _get_parser():
    parser = ArgumentParser(description='mqkd_report', prog='mqkd report')
    report_opts(parser)
    return parser


def main(argv=None):
    parser = _get_parser()

    opts = parser.parse_args(argv)
    return report(opts)


if __name__ == "__main__":
    raise SystemExit(main())
