"""
The three protocol parties and their quantum capabilities.

Alice and Bob may only apply one operation from {I, sigma_z, H} to the
travel qubit and reflect it back into the channel. TP may only prepare |+>
and measure in the X basis. These classes are the only place the protocol
touches the qubit algebra on behalf of a party.
"""
from enum import Enum
from typing import Iterator, Optional

from mqkd.protocol.rounds import choose_op
from mqkd.quantum.operators import MeasBasis, Outcome, UnitaryOp
from mqkd.quantum.state import StateVector, apply_op, measure, prepare_plus

TRAVEL_REGISTER = 0


class Party(Enum):
    TP = 'TP'
    ALICE = 'Alice'
    BOB = 'Bob'


class Participant(object):
    """A lightweight participant (Alice or Bob).

    Args:
        party: which participant this is.
        forced_op: always use this operation instead of the random choice.
            The draw is still consumed so forced runs keep the stream layout.
    """

    def __init__(self, party: Party, forced_op: Optional[UnitaryOp] = None):
        if party is Party.TP:
            raise ValueError("TP is not a lightweight participant")
        self.party = party
        self.forced_op = forced_op

    def choose(self, rand_stream: Iterator[float]) -> UnitaryOp:
        op = choose_op(rand_stream)
        return op if self.forced_op is None else self.forced_op

    def act(self, state: StateVector, op: UnitaryOp) -> StateVector:
        return self.reflect(apply_op(state, op, TRAVEL_REGISTER))

    def reflect(self, state: StateVector) -> StateVector:
        # reflection sends the qubit on without touching it
        return state

    def __repr__(self):
        forced = '' if self.forced_op is None else f', forced_op={self.forced_op.name}'
        return f'{self.__class__.__name__}({self.party.value}{forced})'


class ThirdParty(object):
    """TP: the quantum server that prepares and measures the travel qubit."""

    party = Party.TP

    def prepare(self) -> StateVector:
        return prepare_plus()

    def measure(self, state: StateVector, rand: float) -> Outcome:
        outcome, _ = measure(state, TRAVEL_REGISTER, MeasBasis.X, rand)
        return outcome
