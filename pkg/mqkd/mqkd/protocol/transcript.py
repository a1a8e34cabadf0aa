"""Append-only record of a session's public classical messages, stored as JSON lines."""
import json
from dataclasses import replace
from collections import Counter
from typing import Any, Dict, Iterable, List, Optional, Tuple

from mqkd.constants import RecordType
from mqkd.protocol.rounds import CaseLabel, RoundRecord


class Transcript(object):
    """Ordered round records plus session metadata.

    Records can only be appended, with strictly increasing round ids.
    Derived transcripts (e.g. with disclosure flags) are new objects.
    """

    def __init__(self, seed: int, n_rounds: int, adversary: str = 'null', metadata: Optional[Dict[str, Any]] = None):
        self.seed = seed
        self.n_rounds = n_rounds
        self.adversary = adversary
        self.metadata = dict(metadata or {})
        self.error_report: Optional[Dict[str, Any]] = None
        self._records: List[RoundRecord] = []

    @property
    def records(self) -> Tuple[RoundRecord, ...]:
        return tuple(self._records)

    def __len__(self):
        return len(self._records)

    def __iter__(self):
        return iter(self._records)

    def append(self, record: RoundRecord):
        if self._records and record.round_id <= self._records[-1].round_id:
            raise ValueError(
                f"Round ids must be strictly increasing: {record.round_id} after {self._records[-1].round_id}"
            )
        self._records.append(record)

    def extend(self, records: Iterable[RoundRecord]):
        for record in records:
            self.append(record)

    def case_counts(self) -> Dict[CaseLabel, int]:
        counts = Counter(record.case for record in self._records)
        return {case: counts.get(case, 0) for case in CaseLabel}

    def records_of(self, case: CaseLabel) -> List[RoundRecord]:
        return [record for record in self._records if record.case is case]

    def key_records(self) -> List[RoundRecord]:
        return self.records_of(CaseLabel.KEY)

    def with_disclosure(self, key_positions: Iterable[int]) -> 'Transcript':
        """Copy of this transcript with the given Key-round positions marked disclosed.

        Positions index into ``key_records()``, not into round ids.
        """
        key_positions = set(key_positions)
        derived = Transcript(self.seed, self.n_rounds, self.adversary, self.metadata)
        key_position = 0
        for record in self._records:
            if record.case is CaseLabel.KEY:
                disclosed = key_position in key_positions
                key_position += 1
                record = replace(record, disclosed=disclosed)
            derived.append(record)
        derived.error_report = self.error_report
        return derived

    def header(self) -> Dict[str, Any]:
        header = {
            'type': RecordType.SESSION,
            'seed': self.seed,
            'n_rounds': self.n_rounds,
            'adversary': self.adversary,
        }
        header.update(self.metadata)
        return header

    def to_lines(self) -> List[str]:
        lines = [json.dumps(self.header())]
        for record in self._records:
            lines.append(json.dumps({'type': RecordType.ROUND, **record.to_dict()}))
        if self.error_report is not None:
            lines.append(json.dumps({'type': RecordType.ERROR_REPORT, **self.error_report}))
        return lines

    def save(self, path: str):
        with open(path, 'w', encoding='utf-8') as f:
            for line in self.to_lines():
                f.write(line + '\n')

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> 'Transcript':
        transcript = None
        for line_no, line in enumerate(lines, 1):
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            kind = obj.pop('type', None)
            if kind == RecordType.SESSION:
                if transcript is not None:
                    raise ValueError(f"Line {line_no}: second session header")
                seed = obj.pop('seed')
                n_rounds = obj.pop('n_rounds')
                adversary = obj.pop('adversary', 'null')
                transcript = cls(seed, n_rounds, adversary, metadata=obj)
            elif transcript is None:
                raise ValueError(f"Line {line_no}: record before the session header")
            elif kind == RecordType.ROUND:
                transcript.append(RoundRecord.from_dict(obj))
            elif kind == RecordType.ERROR_REPORT:
                transcript.error_report = obj
            else:
                raise ValueError(f"Line {line_no}: unknown record type {kind!r}")
        if transcript is None:
            raise ValueError("Transcript has no session header")
        return transcript


def read_transcript(path: str) -> Transcript:
    with open(path, 'r', encoding='utf-8') as f:
        return Transcript.from_lines(f)
