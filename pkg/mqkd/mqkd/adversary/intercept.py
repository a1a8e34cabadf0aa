from mqkd.adversary import register_adversary
from mqkd.adversary.hook import AdversaryHook
from mqkd.adversary.oracle import intercept_resend_oracle
from mqkd.protocol.rounds import Segment
from mqkd.quantum.operators import MeasBasis
from mqkd.quantum.state import StateVector, measure


@register_adversary(name='intercept_resend')
class InterceptResend(AdversaryHook):
    """Measure the travel qubit on one segment and resend the collapsed state.

    Descriptor: ``intercept_resend:<X|Z>:<segment>``.
    """

    name = 'intercept_resend'

    def __init__(self, basis: MeasBasis, segment: Segment):
        self.basis = basis
        self.segment = segment

    @classmethod
    def from_descriptor_args(cls, args):
        if len(args) != 2:
            raise ValueError(f"intercept_resend expects <basis>:<segment>, got {':'.join(args)!r}")
        return cls(MeasBasis.from_tag(args[0]), Segment.from_tag(args[1]))

    def intercept(self, segment, state: StateVector, rand: float) -> StateVector:
        if segment is not self.segment:
            return state
        _, collapsed = measure(state, 0, self.basis, rand)
        return collapsed

    def descriptor(self):
        return f'{self.name}:{self.basis.value}:{self.segment.value}'

    def exact_statistics(self):
        return intercept_resend_oracle(self.basis, self.segment)
