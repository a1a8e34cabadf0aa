from mqkd.protocol.engine import run_session
from mqkd.protocol.parties import Participant, Party
from mqkd.quantum.operators import UnitaryOp

SEED = 20240917


def forced_session(alice_tag: str, bob_tag: str, n_rounds: int, seed: int = SEED, adversary=None):
    """A session in which both participants always apply the given operations."""
    alice = Participant(Party.ALICE, UnitaryOp.from_tag(alice_tag))
    bob = Participant(Party.BOB, UnitaryOp.from_tag(bob_tag))
    return run_session(n_rounds, seed, adversary, alice, bob)


def binomial_sigma(p: float, n: int) -> float:
    return (p * (1.0 - p) / n) ** 0.5
