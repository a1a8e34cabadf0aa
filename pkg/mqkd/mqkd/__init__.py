""" Main entry point of the mqkd library """
from mqkd import quantum, protocol, distill, adversary, utils, opts
from mqkd.harness import SessionConfig, run_experiment

__all__ = [
    "quantum",
    "protocol",
    "distill",
    "adversary",
    "utils",
    "opts",
    "SessionConfig",
    "run_experiment",
]

__version__ = "0.1"
