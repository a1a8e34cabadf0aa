"""Module turning transcripts into shared keys."""
from mqkd.distill.bits import derive_alice_bit, derive_bob_bit
from mqkd.distill.checks import (
    AbortReason,
    ErrorReport,
    KeyMaterial,
    SessionTooShortError,
    check_case1,
    disclose_and_compare,
)
from mqkd.distill.amplification import output_length, privacy_amplify
from mqkd.distill.efficiency import EfficiencyStat, qubit_efficiency
from mqkd.distill.keys import key_to_hex, read_key_file, write_key_file
from mqkd.distill.pipeline import DistillationResult, distill_session

__all__ = [
    "derive_alice_bit",
    "derive_bob_bit",
    "AbortReason",
    "ErrorReport",
    "KeyMaterial",
    "SessionTooShortError",
    "check_case1",
    "disclose_and_compare",
    "output_length",
    "privacy_amplify",
    "EfficiencyStat",
    "qubit_efficiency",
    "key_to_hex",
    "read_key_file",
    "write_key_file",
    "DistillationResult",
    "distill_session",
]
