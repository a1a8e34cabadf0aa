"""Empirical attack statistics from simulated sessions."""
from typing import Union

from mqkd.adversary import build_adversary
from mqkd.adversary.collective import CollectiveAttack
from mqkd.adversary.hook import AdversaryHook, AttackOutcomeStats
from mqkd.adversary.params import AttackParams
from mqkd.constants import Defaults
from mqkd.protocol.engine import run_session
from mqkd.protocol.rounds import CaseLabel
from mqkd.protocol.transcript import Transcript
from mqkd.quantum.operators import Outcome
from mqkd.utils.logging import logger

Strategy = Union[str, AdversaryHook, AttackParams, None]


def as_hook(strategy: Strategy) -> AdversaryHook:
    if isinstance(strategy, AttackParams):
        return CollectiveAttack(strategy)
    return build_adversary(strategy)


def empirical_rates(transcript: Transcript):
    """Check-round error rate and Key-round mismatch rate of one transcript."""
    checks = transcript.records_of(CaseLabel.CHECK)
    keys = transcript.key_records()
    check_errors = sum(1 for record in checks if record.tp_outcome is not Outcome.PLUS)
    mismatches = sum(1 for record in keys if record.alice_bit != record.bob_bit)
    return check_errors / max(len(checks), 1), mismatches / max(len(keys), 1)


def attack_report(
    strategy: Strategy,
    n_rounds: int = Defaults.ATTACK_ROUNDS,
    seed: int = Defaults.SEED,
) -> AttackOutcomeStats:
    """Run one session under ``strategy`` and measure what it disturbs.

    Detection and mismatch rates are empirical (mismatches over every Key
    round, disclosed or not); leakage is the strategy's exact value.
    """
    hook = as_hook(strategy)
    transcript = run_session(n_rounds, seed, hook)
    detection, mismatch = empirical_rates(transcript)
    stats = AttackOutcomeStats(
        detection_prob_case1=detection,
        disclosed_mismatch_prob=mismatch,
        leakage_bits=hook.exact_statistics().leakage_bits,
    )
    logger.info(
        f"{hook.descriptor()}: detection {stats.detection_prob_case1:.4f}, "
        f"mismatch {stats.disclosed_mismatch_prob:.4f}, leakage {stats.leakage_bits:.4f} bits"
    )
    return stats
