"""Module defining the three-party protocol rounds and sessions."""
from mqkd.protocol.rounds import (
    DRAWS_PER_ROUND,
    KEY_OP_PAIRS,
    SEGMENT_ORDER,
    CaseLabel,
    DiscardRoundError,
    RoundRecord,
    Segment,
    choose_op,
    classify_case,
    expected_outcome,
)
from mqkd.protocol.parties import Participant, Party, ThirdParty
from mqkd.protocol.transcript import Transcript, read_transcript
from mqkd.protocol.engine import build_record, run_round, run_session

__all__ = [
    "DRAWS_PER_ROUND",
    "KEY_OP_PAIRS",
    "SEGMENT_ORDER",
    "CaseLabel",
    "DiscardRoundError",
    "RoundRecord",
    "Segment",
    "choose_op",
    "classify_case",
    "expected_outcome",
    "Participant",
    "Party",
    "ThirdParty",
    "Transcript",
    "read_transcript",
    "build_record",
    "run_round",
    "run_session",
]
