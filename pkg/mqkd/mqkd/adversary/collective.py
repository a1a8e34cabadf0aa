from dataclasses import replace

import numpy as np

from mqkd.adversary import register_adversary
from mqkd.adversary.analysis import collective_statistics
from mqkd.adversary.hook import AdversaryHook
from mqkd.adversary.params import AttackParams
from mqkd.adversary.unitaries import build_attack_unitaries


@register_adversary(name='collective')
class CollectiveAttack(AdversaryHook):
    """Entangle a fresh ancilla register with the travel qubit on every segment.

    U1 acts on TPtoAlice, U2 on AliceToBob and U3 on BobToTP. Descriptors:
    ``collective:pass_through``, ``collective:random:<seed>`` or
    ``collective:<path to key = value parameter file>``.
    """

    name = 'collective'
    deterministic = True

    def __init__(self, params: AttackParams):
        self.params = params
        self.unitaries = build_attack_unitaries(params)

    @classmethod
    def from_descriptor_args(cls, args):
        if not args:
            raise ValueError("collective expects pass_through, random:<seed> or a parameter file")
        if args == ['pass_through']:
            return cls(AttackParams.pass_through())
        if args[0] == 'random':
            if len(args) != 2:
                raise ValueError(f"collective:random expects one seed, got {args[1:]}")
            params = AttackParams.random(np.random.default_rng(int(args[1])))
            return cls(replace(params, source=f'random:{args[1]}'))
        # a path may itself contain colons
        return cls(AttackParams.from_file(':'.join(args)))

    def intercept(self, segment, state, rand):
        return self.unitaries.apply(segment, state)

    def descriptor(self):
        return f'{self.name}:{self.params.source}'

    def exact_statistics(self):
        return collective_statistics(self.params)
