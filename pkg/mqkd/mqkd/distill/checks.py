"""Eavesdropping checks on a finished transcript: Check rounds and half-disclosure of Key rounds."""
from dataclasses import asdict, dataclass, replace
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from mqkd.protocol.rounds import CaseLabel
from mqkd.protocol.transcript import Transcript
from mqkd.quantum.operators import Outcome
from mqkd.utils.logging import logger


class SessionTooShortError(ValueError):
    pass


class AbortReason(Enum):
    CASE1_THRESHOLD = 'case1_threshold'
    DISCLOSURE_MISMATCH = 'disclosure_mismatch'


@dataclass(frozen=True)
class ErrorReport:
    check_rounds: int = 0
    check_errors: int = 0
    case1_error_rate: float = 0.0
    disclosed_count: int = 0
    disclosed_mismatches: int = 0
    aborted: bool = False
    abort_reason: Optional[AbortReason] = None

    def __post_init__(self):
        if self.aborted and self.abort_reason is None:
            raise ValueError("An aborted session needs an abort reason")

    @property
    def disclosed_mismatch_rate(self) -> float:
        return self.disclosed_mismatches / max(self.disclosed_count, 1)

    @property
    def observed_error_rate(self) -> float:
        return max(self.case1_error_rate, self.disclosed_mismatch_rate)

    def combine(self, other: 'ErrorReport') -> 'ErrorReport':
        """Check-round counts from ``self``, disclosure counts from ``other``.

        The first abort reason wins.
        """
        aborted = self.aborted or other.aborted
        reason = self.abort_reason if self.aborted else other.abort_reason
        return replace(
            self,
            disclosed_count=other.disclosed_count,
            disclosed_mismatches=other.disclosed_mismatches,
            aborted=aborted,
            abort_reason=reason,
        )

    def to_dict(self):
        obj = asdict(self)
        obj['abort_reason'] = None if self.abort_reason is None else self.abort_reason.value
        return obj

    @classmethod
    def from_dict(cls, obj) -> 'ErrorReport':
        obj = dict(obj)
        reason = obj.pop('abort_reason', None)
        fields = {name: obj[name] for name in cls.__dataclass_fields__ if name in obj}
        return cls(**fields, abort_reason=None if reason is None else AbortReason(reason))


@dataclass(frozen=True)
class KeyMaterial:
    """Raw Key-round bits of both parties and what is left after disclosure.

    ``check_indices`` index the raw bit lists. ``final_key`` is Alice's copy of
    the undisclosed bits; ``bob_final`` is Bob's.
    """
    alice_raw: Tuple[int, ...]
    bob_raw: Tuple[int, ...]
    check_indices: Tuple[int, ...]
    final_key: Tuple[int, ...]
    bob_final: Tuple[int, ...]

    def __post_init__(self):
        if len(self.alice_raw) != len(self.bob_raw):
            raise ValueError("Alice and Bob must hold the same number of raw bits")
        if len(self.check_indices) != len(self.alice_raw) // 2:
            raise ValueError(f"Expected {len(self.alice_raw) // 2} disclosed positions, got {len(self.check_indices)}")

    @property
    def remaining_indices(self) -> List[int]:
        disclosed = set(self.check_indices)
        return [i for i in range(len(self.alice_raw)) if i not in disclosed]


def check_case1(transcript: Transcript, threshold: float) -> ErrorReport:
    """Count Check rounds whose published outcome is not |+>."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"Case-1 threshold must be in [0, 1], got {threshold}")
    checks = transcript.records_of(CaseLabel.CHECK)
    errors = sum(1 for record in checks if record.tp_outcome is not Outcome.PLUS)
    rate = errors / max(len(checks), 1)
    aborted = rate > threshold
    if aborted:
        logger.warning(f"Case-1 error rate {rate:.4f} over {len(checks)} Check rounds exceeds threshold {threshold}")
    return ErrorReport(
        check_rounds=len(checks),
        check_errors=errors,
        case1_error_rate=rate,
        aborted=aborted,
        abort_reason=AbortReason.CASE1_THRESHOLD if aborted else None,
    )


def choose_check_indices(n_bits: int, rng: np.random.Generator) -> Tuple[int, ...]:
    """floor(n_bits / 2) distinct positions, sorted."""
    chosen = rng.choice(n_bits, size=n_bits // 2, replace=False)
    return tuple(sorted(int(i) for i in chosen))


def disclose_and_compare(
    transcript: Transcript,
    rng: np.random.Generator,
    tolerance: Optional[int] = 0,
) -> Tuple[KeyMaterial, ErrorReport]:
    """Publish half of the Key-round bits and compare them.

    Args:
        transcript: a finished session.
        rng: the session's disclosure stream.
        tolerance: mismatches accepted before aborting; ``None`` never aborts.
    """
    keys = transcript.key_records()
    if len(keys) < 2:
        raise SessionTooShortError(f"Need at least 2 Key rounds for disclosure, the session has {len(keys)}")
    alice_raw = tuple(record.alice_bit for record in keys)
    bob_raw = tuple(record.bob_bit for record in keys)
    check_indices = choose_check_indices(len(keys), rng)
    mismatches = sum(1 for i in check_indices if alice_raw[i] != bob_raw[i])

    disclosed = set(check_indices)
    remaining = [i for i in range(len(keys)) if i not in disclosed]
    material = KeyMaterial(
        alice_raw=alice_raw,
        bob_raw=bob_raw,
        check_indices=check_indices,
        final_key=tuple(alice_raw[i] for i in remaining),
        bob_final=tuple(bob_raw[i] for i in remaining),
    )
    aborted = tolerance is not None and mismatches > tolerance
    if aborted:
        logger.warning(f"{mismatches} of {len(check_indices)} disclosed bits disagree (tolerance {tolerance})")
    report = ErrorReport(
        disclosed_count=len(check_indices),
        disclosed_mismatches=mismatches,
        aborted=aborted,
        abort_reason=AbortReason.DISCLOSURE_MISMATCH if aborted else None,
    )
    return material, report
