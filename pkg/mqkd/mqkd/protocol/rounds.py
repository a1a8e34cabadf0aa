"""One protocol round: TP -> Alice -> Bob -> TP over simulated quantum segments."""
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from mqkd.quantum.operators import OP_ALPHABET, Outcome, UnitaryOp

# Uniform draws consumed by every round, in this order:
# Alice's choice, Bob's choice, one per segment for the adversary, TP's measurement.
DRAWS_PER_ROUND = 6


class Segment(Enum):
    TP_TO_ALICE = 'TPtoAlice'
    ALICE_TO_BOB = 'AliceToBob'
    BOB_TO_TP = 'BobToTP'

    @classmethod
    def from_tag(cls, tag: str) -> 'Segment':
        lookup = {segment.value.lower(): segment for segment in cls}
        lookup.update({segment.name.lower(): segment for segment in cls})
        try:
            return lookup[tag.strip().lower()]
        except KeyError:
            raise ValueError(f"Unknown segment {tag!r}, expected one of {[s.value for s in cls]}")


SEGMENT_ORDER = (Segment.TP_TO_ALICE, Segment.ALICE_TO_BOB, Segment.BOB_TO_TP)

# operations that carry a key bit, and the four Key-round combinations
KEY_OPS = (UnitaryOp.IDENTITY, UnitaryOp.PAULI_Z)
KEY_OP_PAIRS = tuple((alice_op, bob_op) for alice_op in KEY_OPS for bob_op in KEY_OPS)


class CaseLabel(Enum):
    CHECK = 'check'
    KEY = 'key'
    DISCARD = 'discard'


class DiscardRoundError(ValueError):
    pass


def choose_op(rand_stream: Iterator[float]) -> UnitaryOp:
    """Draw one operation uniformly from {I, sigma_z, H}, consuming one draw."""
    u = next(rand_stream)
    return OP_ALPHABET[min(int(u * len(OP_ALPHABET)), len(OP_ALPHABET) - 1)]


def classify_case(alice_op: UnitaryOp, bob_op: UnitaryOp) -> CaseLabel:
    n_hadamard = (alice_op is UnitaryOp.HADAMARD) + (bob_op is UnitaryOp.HADAMARD)
    if n_hadamard == 2:
        return CaseLabel.CHECK
    if n_hadamard == 0:
        return CaseLabel.KEY
    return CaseLabel.DISCARD


def expected_outcome(alice_op: UnitaryOp, bob_op: UnitaryOp) -> Outcome:
    case = classify_case(alice_op, bob_op)
    if case is CaseLabel.DISCARD:
        raise DiscardRoundError(f"No expected outcome for discarded combination ({alice_op.name}, {bob_op.name})")
    if case is CaseLabel.CHECK:
        return Outcome.PLUS
    return Outcome.PLUS if alice_op is bob_op else Outcome.MINUS


@dataclass(frozen=True)
class RoundRecord:
    round_id: int
    alice_op: UnitaryOp
    bob_op: UnitaryOp
    tp_outcome: Outcome
    case: CaseLabel
    alice_bit: Optional[int] = None
    bob_bit: Optional[int] = None
    disclosed: bool = False

    def __post_init__(self):
        if self.case is not classify_case(self.alice_op, self.bob_op):
            raise ValueError(f"Round {self.round_id}: case {self.case} inconsistent with operations")
        has_bits = self.alice_bit is not None and self.bob_bit is not None
        if has_bits != (self.case is CaseLabel.KEY):
            raise ValueError(f"Round {self.round_id}: key bits must be present exactly in Key rounds")
        if self.disclosed and self.case is not CaseLabel.KEY:
            raise ValueError(f"Round {self.round_id}: only Key rounds can be disclosed")

    def to_dict(self):
        # stable field order for diff-able transcripts
        return {
            'round_id': self.round_id,
            'alice_op': self.alice_op.value,
            'bob_op': self.bob_op.value,
            'tp_outcome': self.tp_outcome.value,
            'case': self.case.value,
            'alice_bit': self.alice_bit,
            'bob_bit': self.bob_bit,
            'disclosed': self.disclosed,
        }

    @classmethod
    def from_dict(cls, obj) -> 'RoundRecord':
        return cls(
            round_id=int(obj['round_id']),
            alice_op=UnitaryOp(obj['alice_op']),
            bob_op=UnitaryOp(obj['bob_op']),
            tp_outcome=Outcome(obj['tp_outcome']),
            case=CaseLabel(obj['case']),
            alice_bit=obj.get('alice_bit'),
            bob_bit=obj.get('bob_bit'),
            disclosed=bool(obj.get('disclosed', False)),
        )
