from mqkd.adversary import register_adversary
from mqkd.adversary.hook import AdversaryHook, AttackOutcomeStats


@register_adversary(name='null')
class NullAdversary(AdversaryHook):
    """Honest channel: every segment passes the qubit through."""

    name = 'null'
    deterministic = True

    @classmethod
    def from_descriptor_args(cls, args):
        if args:
            raise ValueError(f"null adversary takes no arguments, got {args}")
        return cls()

    def intercept(self, segment, state, rand):
        return state

    def exact_statistics(self):
        return AttackOutcomeStats()
