"""From a finished transcript to an amplified key."""
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from mqkd.constants import Defaults
from mqkd.distill.amplification import draw_hash_seed, output_length, privacy_amplify
from mqkd.distill.checks import ErrorReport, KeyMaterial, SessionTooShortError, check_case1, disclose_and_compare
from mqkd.distill.efficiency import EfficiencyStat, qubit_efficiency
from mqkd.distill.keys import key_to_hex
from mqkd.protocol.transcript import Transcript
from mqkd.utils.logging import logger
from mqkd.utils.misc import session_streams


@dataclass
class DistillationResult:
    """Everything a session yields after the classical discussion.

    ``transcript`` carries the disclosure flags, the hash seed in its header
    and the error report; ``final_key`` is the amplified key (empty when the
    session aborted or was too short).
    """
    transcript: Transcript
    error_report: ErrorReport
    key_material: Optional[KeyMaterial]
    efficiency: EfficiencyStat
    hash_seed: np.ndarray
    final_key: np.ndarray
    too_short: bool = False

    @property
    def aborted(self) -> bool:
        return self.error_report.aborted


def distill_session(
    transcript: Transcript,
    case1_threshold: float = Defaults.CASE1_THRESHOLD,
    disclosure_tolerance: Optional[int] = Defaults.DISCLOSURE_TOLERANCE,
    pa_out_len: Optional[int] = None,
    streams: Optional[Dict[str, np.random.Generator]] = None,
    allow_short: bool = False,
) -> DistillationResult:
    """Check rounds, half-disclosure, then privacy amplification.

    The disclosure and hash streams are the session seed's children unless
    ``streams`` is given. With ``allow_short`` a session with fewer than two Key
    rounds yields an empty key instead of raising SessionTooShortError.
    """
    streams = session_streams(transcript.seed) if streams is None else streams
    case1_report = check_case1(transcript, case1_threshold)
    try:
        material, disclosure_report = disclose_and_compare(transcript, streams['disclosure'], disclosure_tolerance)
    except SessionTooShortError as err:
        if not allow_short:
            raise
        logger.warning(f"No key distilled: {err}")
        material, disclosure_report = None, ErrorReport()
    report = case1_report.combine(disclosure_report)

    hash_seed = np.zeros(0, dtype=np.uint8)
    final_key = np.zeros(0, dtype=np.uint8)
    if material is not None and not report.aborted:
        n_bits = len(material.final_key)
        out_len = output_length(n_bits, report.observed_error_rate, pa_out_len)
        hash_seed = draw_hash_seed(streams['hash'], n_bits, out_len)
        final_key = privacy_amplify(material.final_key, hash_seed, out_len)
        if not np.array_equal(final_key, privacy_amplify(material.bob_final, hash_seed, out_len)):
            logger.warning("Alice's and Bob's amplified keys differ")
        logger.info(f"Amplified {n_bits} bits to {out_len} bits")

    disclosed = transcript.with_disclosure(material.check_indices if material is not None else ())
    disclosed.metadata.update({
        'case1_threshold': case1_threshold,
        'disclosure_tolerance': disclosure_tolerance,
        'hash_seed_bits': int(hash_seed.size),
        'hash_seed': key_to_hex(hash_seed),
    })
    disclosed.error_report = report.to_dict()

    return DistillationResult(
        transcript=disclosed,
        error_report=report,
        key_material=material,
        efficiency=qubit_efficiency(transcript, material),
        hash_seed=hash_seed,
        final_key=final_key,
        too_short=material is None,
    )
