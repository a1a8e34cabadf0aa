import os
import sys

import configargparse as cfargparse
import yaml

from mqkd.constants import ExitCode
from mqkd.harness.config import ConfigError, SessionConfig
from mqkd.harness.sweep import expand_grid, load_grid


class SessionOptsCheckerMixin(object):
    """Checker with methods for validate session related options."""

    @staticmethod
    def _validate_file(file_path, info):
        """Check `file_path` is valid or raise `ConfigError`."""
        if not os.path.isfile(file_path):
            raise ConfigError(f"Please check path of your {info} file! {file_path}")

    @staticmethod
    def _validate_output_dir(file_path, info):
        if not file_path:
            return
        dirname = os.path.dirname(os.path.abspath(file_path))
        if not os.path.isdir(dirname):
            raise ConfigError(f"Directory of the {info} does not exist: {dirname}")

    @classmethod
    def validate_run_opts(cls, opts):
        """Validate the options of a session; returns the resulting config."""
        for name, info in (('transcript_path', 'transcript'), ('key_path', 'key file'), ('stats_csv', 'statistics')):
            cls._validate_output_dir(getattr(opts, name, None), info)
        return SessionConfig.from_opts(opts)

    @classmethod
    def validate_report_opts(cls, opts):
        cls._validate_output_dir(opts.stats_csv, 'statistics')
        return SessionConfig(n_rounds=opts.n_rounds, seed=opts.seed, stats_csv=opts.stats_csv).validate()

    @classmethod
    def validate_sweep_opts(cls, opts):
        """Check the grid file parses and expands; returns the grid mapping."""
        cls._validate_file(opts.grid, 'sweep grid')
        cls._validate_output_dir(opts.stats_csv, 'statistics')
        if opts.n_workers < 1:
            raise ConfigError(f"n_workers must be >= 1, got {opts.n_workers}")
        if opts.n_rounds is not None and opts.n_rounds < 1:
            raise ConfigError(f"n_rounds must be >= 1, got {opts.n_rounds}")
        if not 0 <= opts.seed < 2 ** 64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {opts.seed}")
        try:
            grid = load_grid(opts.grid)
        except yaml.YAMLError as err:
            raise ConfigError(f"{opts.grid}: {err}")
        expand_grid(grid)
        return grid

    @classmethod
    def validate_inspect_opts(cls, opts):
        cls._validate_file(opts.transcript, 'transcript')
        cls._validate_output_dir(opts.stats_csv, 'statistics')


class ArgumentParser(cfargparse.ArgumentParser, SessionOptsCheckerMixin):
    """Option parser powered with option check methods."""

    def __init__(
        self,
        config_file_parser_class=cfargparse.YAMLConfigFileParser,
        formatter_class=cfargparse.ArgumentDefaultsHelpFormatter,
        **kwargs,
    ):
        super(ArgumentParser, self).__init__(
            config_file_parser_class=config_file_parser_class, formatter_class=formatter_class, **kwargs
        )

    @classmethod
    def defaults(cls, *args):
        """Get default arguments added to a parser by all ``*args``."""
        dummy_parser = cls()
        for callback in args:
            callback(dummy_parser)
        defaults = dummy_parser.parse_known_args([])[0]
        return defaults

    def error(self, message):
        """Malformed command lines are configuration errors."""
        self.print_usage(sys.stderr)
        self.exit(ExitCode.CONFIG_ERROR, f'{self.prog}: error: {message}\n')
