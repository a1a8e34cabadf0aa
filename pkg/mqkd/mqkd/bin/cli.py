#!/usr/bin/env python
"""``mqkd <command> [options]``: one entry point for every workflow."""
import sys

from mqkd.bin import inspect_transcript, report, run, sweep
from mqkd.constants import ExitCode

COMMANDS = {
    'run': run.main,
    'report': report.main,
    'sweep': sweep.main,
    'inspect': inspect_transcript.main,
}


def usage():
    return f"usage: mqkd {{{','.join(COMMANDS)}}} [options]  (mqkd <command> -h for help)"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] not in COMMANDS:
        print(usage(), file=sys.stderr)
        return ExitCode.SUCCESS if argv[:1] in (['-h'], ['--help']) else ExitCode.CONFIG_ERROR
    return COMMANDS[argv[0]](argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
