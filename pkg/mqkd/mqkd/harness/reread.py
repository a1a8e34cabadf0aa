"""Re-derive a session report from a persisted transcript alone."""
from typing import Optional

import numpy as np

from mqkd.distill.amplification import privacy_amplify
from mqkd.distill.checks import AbortReason
from mqkd.distill.keys import hex_to_key
from mqkd.harness.experiment import SessionReport, key_digest
from mqkd.protocol.rounds import CaseLabel
from mqkd.protocol.transcript import Transcript
from mqkd.utils.logging import logger
from mqkd.utils.statistics import SessionStatistics

MIN_KEY_ROUNDS = 2


def reread_abort(transcript: Transcript, stats: SessionStatistics) -> Optional[AbortReason]:
    """Apply the recorded thresholds to the recounted rates."""
    threshold = transcript.metadata.get('case1_threshold')
    tolerance = transcript.metadata.get('disclosure_tolerance')
    if threshold is not None and stats.case1_error_rate() > threshold:
        return AbortReason.CASE1_THRESHOLD
    if tolerance is not None and stats.disclosed_mismatches > tolerance:
        return AbortReason.DISCLOSURE_MISMATCH
    return None


def reread_key(transcript: Transcript, established: bool) -> np.ndarray:
    """Alice's final key, rebuilt from the undisclosed Key rounds and the recorded hash seed."""
    remaining = [r.alice_bit for r in transcript.key_records() if not r.disclosed]
    if not established:
        return privacy_amplify([], [], 0)
    seed_bits = int(transcript.metadata.get('hash_seed_bits', 0))
    hash_seed = hex_to_key(transcript.metadata.get('hash_seed', ''), seed_bits)
    return privacy_amplify(remaining, hash_seed, max(seed_bits - len(remaining) + 1, 0))


def reread_report(transcript: Transcript) -> SessionReport:
    stats = SessionStatistics.from_records(transcript)
    reason = reread_abort(transcript, stats)
    recorded = (transcript.error_report or {}).get('abort_reason')
    if transcript.error_report is not None and recorded != (None if reason is None else reason.value):
        logger.warning(f"Transcript records abort reason {recorded!r}, recounting gives {reason}")

    too_short = stats.case_counts[CaseLabel.KEY] < MIN_KEY_ROUNDS
    established = reason is None and not too_short
    key = reread_key(transcript, established)
    n_remaining = 0 if too_short else stats.remaining_key_bits()
    freqs = stats.case_frequencies()
    return SessionReport(
        n_rounds=transcript.n_rounds,
        seed=transcript.seed,
        adversary=transcript.adversary,
        freq_check=freqs[CaseLabel.CHECK.value],
        freq_key=freqs[CaseLabel.KEY.value],
        freq_discard=freqs[CaseLabel.DISCARD.value],
        case1_error_rate=stats.case1_error_rate(),
        disclosed_mismatch_rate=stats.disclosed_mismatch_rate(),
        aborted=reason is not None,
        abort_reason=None if reason is None else reason.value,
        qubit_efficiency=n_remaining / len(transcript),
        efficiency_fraction=f'{n_remaining}/{len(transcript)}',
        key_established=established,
        key_bits=int(key.size),
        key_digest=key_digest(key),
    )
