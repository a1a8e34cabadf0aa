""" Implementation of all available options """
import configargparse

from mqkd.adversary import AVAILABLE_ADVERSARIES
from mqkd.constants import Defaults
from mqkd.quantum.operators import OP_ALPHABET


def config_opts(parser):
    group = parser.add_argument_group("Configuration")
    group.add('-config', '--config', required=False, is_config_file_arg=True, help='Path of the main YAML config file.')
    group.add(
        '-save_config',
        '--save_config',
        required=False,
        is_write_out_config_file_arg=True,
        help='Path where to save the config.',
    )


def _add_logging_opts(parser):
    group = parser.add_argument_group('Logging')
    group.add('--log_file', '-log_file', type=str, default="", help="Output logs to a file under this path.")
    group.add(
        '--structured_log_file',
        '-structured_log_file',
        type=str,
        default="",
        help="Output machine-readable structured logs to a file under this path."
    )
    group.add(
        '--log_file_level',
        '-log_file_level',
        type=str,
        action=StoreLoggingLevelAction,
        choices=StoreLoggingLevelAction.CHOICES,
        default="0",
    )
    group.add(
        '--log_file_rotate',
        '-log_file_rotate',
        action="store_true",
        help="Rotate the log file at 1 MB, keeping 10 backups.",
    )
    group.add('--verbose', '-verbose', action="store_true", help='Log debug messages on the console.')


def _add_reproducibility_opts(parser):
    group = parser.add_argument_group('Reproducibility')
    group.add(
        '--seed',
        '-seed',
        type=int,
        default=Defaults.SEED,
        help="Session seed. Every random draw of a run derives from it, "
        "so the same flags and seed give byte-identical outputs.",
    )


def _add_session_opts(parser):
    group = parser.add_argument_group('Session')
    group.add('--n_rounds', '-n_rounds', type=int, default=Defaults.N_ROUNDS, help="Number of protocol rounds.")
    group.add(
        '--adversary',
        '-adversary',
        type=str,
        default='null',
        help="Adversary descriptor, one of: null | intercept_resend:<Z|X>:<segment> | "
        "collective:<pass_through|random:SEED|PARAMS_FILE>. "
        f"Registered adversaries: {', '.join(sorted(AVAILABLE_ADVERSARIES))}.",
    )
    group.add(
        '--alice_op',
        '-alice_op',
        type=str,
        default=None,
        choices=[op.value for op in OP_ALPHABET],
        help="Force Alice to apply this operation every round (I, Z or H). By default it is drawn uniformly.",
    )
    group.add(
        '--bob_op',
        '-bob_op',
        type=str,
        default=None,
        choices=[op.value for op in OP_ALPHABET],
        help="Force Bob to apply this operation every round (I, Z or H). By default it is drawn uniformly.",
    )


def _add_distillation_opts(parser):
    group = parser.add_argument_group('Distillation')
    group.add(
        '--case1_threshold',
        '-case1_threshold',
        type=float,
        default=Defaults.CASE1_THRESHOLD,
        help="Abort when the error rate of the check rounds exceeds this value.",
    )
    group.add(
        '--disclosure_tolerance',
        '-disclosure_tolerance',
        type=int,
        default=Defaults.DISCLOSURE_TOLERANCE,
        help="Abort when more disclosed key positions than this disagree.",
    )
    group.add(
        '--pa_out_len',
        '-pa_out_len',
        type=int,
        default=None,
        help="Length of the final key. By default it is derived from the observed error rate.",
    )


def _add_output_opts(parser):
    group = parser.add_argument_group('Outputs')
    group.add('--transcript_path', '-transcript_path', type=str, default=None,
              help="Write the JSON-lines transcript of the session here.")
    group.add('--key_path', '-key_path', type=str, default=None, help="Write the final key (hex) here.")
    group.add('--stats_csv', '-stats_csv', type=str, default=None, help="Write the session statistics as CSV here.")


def run_opts(parser):
    """Options of a single simulated session."""
    config_opts(parser)
    _add_reproducibility_opts(parser)
    _add_session_opts(parser)
    _add_distillation_opts(parser)
    _add_output_opts(parser)
    _add_logging_opts(parser)


def report_opts(parser):
    """Options of the protocol comparison report."""
    config_opts(parser)
    _add_reproducibility_opts(parser)
    group = parser.add_argument_group('Report')
    group.add(
        '--n_rounds',
        '-n_rounds',
        type=int,
        default=Defaults.N_ROUNDS,
        help="Rounds of the honest session whose efficiency is reported.",
    )
    group.add('--stats_csv', '-stats_csv', type=str, default=None, help="Write the session statistics as CSV here.")
    _add_logging_opts(parser)


def sweep_opts(parser):
    """Options of an attack sweep."""
    config_opts(parser)
    _add_reproducibility_opts(parser)
    group = parser.add_argument_group('Sweep')
    group.add('--grid', '-grid', type=str, required=True, help="YAML file describing the attack grid.")
    group.add(
        '--n_rounds',
        '-n_rounds',
        type=int,
        default=None,
        help="Rounds per grid point. Overrides the grid's own n_rounds.",
    )
    group.add('--n_workers', '-n_workers', type=int, default=1, help="Evaluate grid points in this many processes.")
    group.add('--stats_csv', '-stats_csv', type=str, default=None, help="Write the sweep rows as CSV here.")
    _add_logging_opts(parser)


def inspect_opts(parser):
    """Options of the transcript re-reader."""
    group = parser.add_argument_group('Inspect')
    group.add('--transcript', '-transcript', type=str, required=True, help="JSON-lines transcript to re-read.")
    group.add('--stats_csv', '-stats_csv', type=str, default=None, help="Write the recomputed statistics as CSV here.")
    _add_logging_opts(parser)


class StoreLoggingLevelAction(configargparse.Action):
    """Convert string to logging level"""

    import logging

    LEVELS = {
        "CRITICAL": logging.CRITICAL,
        "ERROR": logging.ERROR,
        "WARNING": logging.WARNING,
        "INFO": logging.INFO,
        "DEBUG": logging.DEBUG,
        "NOTSET": logging.NOTSET,
    }

    CHOICES = list(LEVELS.keys()) + [str(_) for _ in LEVELS.values()]

    def __init__(self, option_strings, dest, help=None, **kwargs):
        super(StoreLoggingLevelAction, self).__init__(option_strings, dest, help=help, **kwargs)

    def __call__(self, parser, namespace, value, option_string=None):
        # Get the key 'value' in the dict, or just use 'value'
        level = StoreLoggingLevelAction.LEVELS.get(value, value)
        setattr(namespace, self.dest, level)
