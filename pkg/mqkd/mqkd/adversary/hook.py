"""Base class for attack strategies plugged into the quantum segments of a round."""
from dataclasses import asdict, dataclass

from mqkd.constants import Tolerance
from mqkd.quantum.state import StateVector


def _clip_unit(value: float, name: str) -> float:
    if value < -Tolerance.STATE or value > 1.0 + Tolerance.STATE:
        raise ValueError(f"{name} = {value!r} is outside [0, 1]")
    return min(max(float(value), 0.0), 1.0)


@dataclass(frozen=True)
class AttackOutcomeStats:
    """What an attack costs the adversary and what it gains.

    Args:
        detection_prob_case1: probability that a Check round shows |->.
        disclosed_mismatch_prob: probability that a Key round's bits disagree.
        leakage_bits: information on the key bit, in bits.
    """
    detection_prob_case1: float = 0.0
    disclosed_mismatch_prob: float = 0.0
    leakage_bits: float = 0.0

    def __post_init__(self):
        for name in ('detection_prob_case1', 'disclosed_mismatch_prob', 'leakage_bits'):
            object.__setattr__(self, name, _clip_unit(getattr(self, name), name))

    @property
    def detectable(self) -> bool:
        return self.detection_prob_case1 + self.disclosed_mismatch_prob > Tolerance.STATE

    def to_dict(self):
        return asdict(self)


class AdversaryHook(object):
    """An attack on the quantum channel.

    Subclasses transform the in-flight state on the segments they attack and
    leave the others untouched. ``rand`` is the uniform draw the round reserves
    for the segment; it must be the only randomness the hook uses.

    A hook sets ``deterministic`` when ``intercept`` ignores ``rand`` and keeps
    no state between calls (``begin_round`` does nothing). Sessions then reuse
    the state reaching TP for each pair of operations.
    """

    name = None
    deterministic = False

    def begin_round(self):
        """Called once before TP prepares the qubit of a new round."""
        pass

    def intercept(self, segment, state: StateVector, rand: float) -> StateVector:
        raise NotImplementedError()

    def descriptor(self) -> str:
        return self.name

    def exact_statistics(self) -> AttackOutcomeStats:
        """Exact detection, mismatch and leakage of this strategy."""
        raise NotImplementedError()

    def __repr__(self):
        return f'{self.__class__.__name__}({self.descriptor()!r})'
