"""Module driving configured sessions, comparisons and attack sweeps."""
from mqkd.harness.config import ConfigError, SessionConfig
from mqkd.harness.experiment import SessionReport, execute_session, run_experiment
from mqkd.harness.comparison import comparison_report
from mqkd.harness.sweep import sweep_attacks
from mqkd.harness.reread import reread_report

__all__ = [
    "ConfigError",
    "SessionConfig",
    "SessionReport",
    "execute_session",
    "run_experiment",
    "comparison_report",
    "sweep_attacks",
    "reread_report",
]
