"""Validated configuration of one simulated session."""
from dataclasses import dataclass, fields
from typing import Optional

from mqkd.adversary import build_adversary
from mqkd.adversary.hook import AdversaryHook
from mqkd.constants import Defaults
from mqkd.quantum.operators import UnitaryOp


class ConfigError(ValueError):
    pass


@dataclass
class SessionConfig:
    n_rounds: int = Defaults.N_ROUNDS
    seed: int = Defaults.SEED
    adversary: str = 'null'
    case1_threshold: float = Defaults.CASE1_THRESHOLD
    disclosure_tolerance: int = Defaults.DISCLOSURE_TOLERANCE
    pa_out_len: Optional[int] = None
    alice_op: Optional[str] = None
    bob_op: Optional[str] = None
    transcript_path: Optional[str] = None
    key_path: Optional[str] = None
    stats_csv: Optional[str] = None

    def validate(self) -> 'SessionConfig':
        if self.n_rounds < 1:
            raise ConfigError(f"n_rounds must be >= 1, got {self.n_rounds}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not 0.0 <= self.case1_threshold <= 1.0:
            raise ConfigError(f"case1_threshold must be in [0, 1], got {self.case1_threshold}")
        if self.disclosure_tolerance < 0:
            raise ConfigError(f"disclosure_tolerance must be >= 0, got {self.disclosure_tolerance}")
        if self.pa_out_len is not None and self.pa_out_len < 0:
            raise ConfigError(f"pa_out_len must be >= 0, got {self.pa_out_len}")
        for name in ('alice_op', 'bob_op'):
            self.forced_op(name)
        self.build_adversary()
        return self

    def forced_op(self, name: str) -> Optional[UnitaryOp]:
        tag = getattr(self, name)
        if tag is None:
            return None
        try:
            return UnitaryOp.from_tag(tag)
        except ValueError as err:
            raise ConfigError(f"{name}: {err}")

    def build_adversary(self) -> AdversaryHook:
        try:
            return build_adversary(self.adversary)
        except (ValueError, OSError) as err:
            raise ConfigError(f"Invalid adversary {self.adversary!r}: {err}")

    @classmethod
    def from_opts(cls, opts) -> 'SessionConfig':
        """Pick the session fields out of parsed command-line options."""
        values = {f.name: getattr(opts, f.name) for f in fields(cls) if hasattr(opts, f.name)}
        return cls(**values).validate()
