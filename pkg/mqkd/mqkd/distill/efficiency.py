from dataclasses import dataclass
from fractions import Fraction

from mqkd.distill.checks import KeyMaterial
from mqkd.protocol.transcript import Transcript


@dataclass(frozen=True)
class EfficiencyStat:
    """Qubit efficiency q = n / m.

    n counts the shared bits left after disclosure (before amplification),
    m the single photons TP sent, one per round.
    """
    n: int
    m: int

    def __post_init__(self):
        if self.m < 1 or not 0 <= self.n <= self.m:
            raise ValueError(f"Invalid efficiency counts n={self.n}, m={self.m}")

    @property
    def q(self) -> Fraction:
        return Fraction(self.n, self.m)

    def __float__(self):
        return float(self.q)


def qubit_efficiency(transcript: Transcript, key: KeyMaterial = None) -> EfficiencyStat:
    n = 0 if key is None else len(key.final_key)
    return EfficiencyStat(n=n, m=len(transcript))
