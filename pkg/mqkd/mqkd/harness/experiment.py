"""One configured session end to end: rounds, distillation, persisted outputs."""
import hashlib
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, Optional, Tuple

from mqkd.distill.keys import key_to_hex, write_key_file
from mqkd.distill.pipeline import DistillationResult, distill_session
from mqkd.harness.config import SessionConfig
from mqkd.protocol.engine import run_session
from mqkd.protocol.parties import Participant, Party
from mqkd.protocol.rounds import CaseLabel
from mqkd.utils.logging import logger
from mqkd.utils.misc import check_path
from mqkd.utils.report_manager import ReportMgr
from mqkd.utils.statistics import SessionStatistics


@dataclass
class SessionReport:
    """Aggregate outcome of a session. Everything but ``wall_time`` is deterministic."""
    n_rounds: int
    seed: int
    adversary: str
    freq_check: float
    freq_key: float
    freq_discard: float
    case1_error_rate: float
    disclosed_mismatch_rate: float
    aborted: bool
    abort_reason: Optional[str]
    qubit_efficiency: float
    efficiency_fraction: str
    key_established: bool
    key_bits: int
    key_digest: str
    wall_time: float = field(default=0.0, compare=False)

    @property
    def case_frequencies(self) -> Dict[str, float]:
        return {
            CaseLabel.CHECK.value: self.freq_check,
            CaseLabel.KEY.value: self.freq_key,
            CaseLabel.DISCARD.value: self.freq_discard,
        }

    def to_dict(self, include_wall_time: bool = False):
        obj = asdict(self)
        if not include_wall_time:
            obj.pop('wall_time')
        return obj


def key_digest(bits) -> str:
    return hashlib.sha256(key_to_hex(bits).encode('ascii')).hexdigest()[:16]


def build_report(config: SessionConfig, adversary: str, result: DistillationResult,
                 stats: SessionStatistics, wall_time: float) -> SessionReport:
    freqs = stats.case_frequencies()
    reason = result.error_report.abort_reason
    return SessionReport(
        n_rounds=config.n_rounds,
        seed=config.seed,
        adversary=adversary,
        freq_check=freqs[CaseLabel.CHECK.value],
        freq_key=freqs[CaseLabel.KEY.value],
        freq_discard=freqs[CaseLabel.DISCARD.value],
        case1_error_rate=result.error_report.case1_error_rate,
        disclosed_mismatch_rate=result.error_report.disclosed_mismatch_rate,
        aborted=result.aborted,
        abort_reason=None if reason is None else reason.value,
        qubit_efficiency=float(result.efficiency.q),
        efficiency_fraction=f'{result.efficiency.n}/{result.efficiency.m}',
        key_established=not (result.aborted or result.too_short),
        key_bits=int(result.final_key.size),
        key_digest=key_digest(result.final_key),
        wall_time=wall_time,
    )


def execute_session(config: SessionConfig, report_mgr: Optional[ReportMgr] = None
                    ) -> Tuple[SessionReport, DistillationResult]:
    """Run, distill and persist one session; also returns the distillation details."""
    config.validate()
    start = time.time()
    hook = config.build_adversary()
    alice = Participant(Party.ALICE, config.forced_op('alice_op'))
    bob = Participant(Party.BOB, config.forced_op('bob_op'))

    transcript = run_session(config.n_rounds, config.seed, hook, alice, bob)
    result = distill_session(
        transcript,
        case1_threshold=config.case1_threshold,
        disclosure_tolerance=config.disclosure_tolerance,
        pa_out_len=config.pa_out_len,
        allow_short=True,
    )
    stats = SessionStatistics.from_records(result.transcript)
    report = build_report(config, hook.descriptor(), result, stats, time.time() - start)

    if config.transcript_path:
        check_path(config.transcript_path, exist_ok=True, log=logger.warning)
        result.transcript.save(config.transcript_path)
        logger.info(f"Saved transcript to {config.transcript_path}")
    if config.key_path:
        check_path(config.key_path, exist_ok=True, log=logger.warning)
        write_key_file(config.key_path, result.final_key)
        logger.info(f"Saved {result.final_key.size}-bit key to {config.key_path}")

    report_mgr = report_mgr if report_mgr is not None else ReportMgr(stats_csv=config.stats_csv)
    if report_mgr.start_time < 0:
        report_mgr.start_time = start
    report_mgr.report_session(report, stats)
    return report, result


def run_experiment(config: SessionConfig) -> SessionReport:
    report, _ = execute_session(config)
    return report
