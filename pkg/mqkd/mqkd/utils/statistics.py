""" Statistics calculation utility """
import time
from collections import Counter

from mqkd.protocol.rounds import CaseLabel
from mqkd.quantum.operators import Outcome
from mqkd.utils.logging import logger, structured_logging


class SessionStatistics(object):
    """
    Accumulator for round statistics.
    Currently calculates:

    * case frequencies
    * Case-1 error rate
    * Key-round and disclosed mismatch rates
    * qubit efficiency (undisclosed Key rounds per round)
    """

    def __init__(self):
        self.n_rounds = 0
        self.case_counts = Counter()
        self.check_errors = 0
        self.key_mismatches = 0
        self.n_disclosed = 0
        self.disclosed_mismatches = 0
        self.start_time = time.time()

    @classmethod
    def from_records(cls, records):
        stats = cls()
        for record in records:
            stats.update_round(record)
        return stats

    def update_round(self, record):
        self.n_rounds += 1
        self.case_counts[record.case] += 1
        if record.case is CaseLabel.CHECK and record.tp_outcome is not Outcome.PLUS:
            self.check_errors += 1
        if record.case is CaseLabel.KEY:
            mismatch = record.alice_bit != record.bob_bit
            self.key_mismatches += mismatch
            if record.disclosed:
                self.n_disclosed += 1
                self.disclosed_mismatches += mismatch

    def update(self, stat):
        """
        Update statistics by suming values with another `SessionStatistics` object

        Args:
            stat: another statistic object
        """
        self.n_rounds += stat.n_rounds
        self.case_counts.update(stat.case_counts)
        self.check_errors += stat.check_errors
        self.key_mismatches += stat.key_mismatches
        self.n_disclosed += stat.n_disclosed
        self.disclosed_mismatches += stat.disclosed_mismatches

    def case_frequency(self, case: CaseLabel) -> float:
        return self.case_counts[case] / max(self.n_rounds, 1)

    def case_frequencies(self):
        return {case.value: self.case_frequency(case) for case in CaseLabel}

    def case1_error_rate(self):
        return self.check_errors / max(self.case_counts[CaseLabel.CHECK], 1)

    def key_mismatch_rate(self):
        return self.key_mismatches / max(self.case_counts[CaseLabel.KEY], 1)

    def disclosed_mismatch_rate(self):
        return self.disclosed_mismatches / max(self.n_disclosed, 1)

    def remaining_key_bits(self):
        return self.case_counts[CaseLabel.KEY] - self.n_disclosed

    def qubit_efficiency(self):
        return self.remaining_key_bits() / max(self.n_rounds, 1)

    def elapsed_time(self):
        """compute elapsed time"""
        return time.time() - self.start_time

    def output(self, prefix=''):
        """Write out statistics to the log."""
        freqs = self.case_frequencies()
        logger.info(
            ("%s%d rounds; check/key/discard: %6.4f/%6.4f/%6.4f; case1 err: %6.4f; "
             + "disclosed mismatch: %6.4f; q: %6.4f; %5.1f sec")
            % (
                prefix,
                self.n_rounds,
                freqs[CaseLabel.CHECK.value],
                freqs[CaseLabel.KEY.value],
                freqs[CaseLabel.DISCARD.value],
                self.case1_error_rate(),
                self.disclosed_mismatch_rate(),
                self.qubit_efficiency(),
                self.elapsed_time(),
            )
        )

    def log_structured(self, prefix):
        structured_logging({
            'type': prefix,
            'n_rounds': self.n_rounds,
            'case_frequencies': self.case_frequencies(),
            'case1_error_rate': self.case1_error_rate(),
            'key_mismatch_rate': self.key_mismatch_rate(),
            'disclosed_mismatch_rate': self.disclosed_mismatch_rate(),
            'qubit_efficiency': self.qubit_efficiency(),
        })
