"""
Exact statistics of intercept-resend attacks by enumerating every measurement branch.

Independent of the sampled protocol: no random draws, only Born
probabilities of each (Eve outcome, TP outcome) path.
"""
from collections import defaultdict
from typing import Iterator, Optional, Tuple

from mqkd.adversary.hook import AttackOutcomeStats
from mqkd.adversary.information import conditional_mutual_information
from mqkd.constants import Tolerance
from mqkd.distill.bits import derive_alice_bit
from mqkd.protocol.rounds import KEY_OP_PAIRS, SEGMENT_ORDER, Segment, expected_outcome
from mqkd.quantum.operators import MeasBasis, Outcome, UnitaryOp
from mqkd.quantum.state import apply_op, prepare_plus, project


def enumerate_branches(
    alice_op: UnitaryOp,
    bob_op: UnitaryOp,
    basis: MeasBasis,
    segment: Segment,
) -> Iterator[Tuple[float, Optional[Outcome], Outcome]]:
    """Yield (probability, Eve's outcome, TP's outcome) for every nonzero branch."""
    paths = [(1.0, None, prepare_plus())]
    # the operation applied right after each segment
    for current, op in zip(SEGMENT_ORDER, (alice_op, bob_op, None)):
        if current is segment:
            split = []
            for prob, _, state in paths:
                for outcome in basis.outcomes:
                    p, post = project(state, 0, basis, outcome)
                    if post is not None:
                        split.append((prob * p, outcome, post))
            paths = split
        if op is not None:
            paths = [(prob, eve, apply_op(state, op)) for prob, eve, state in paths]
    for prob, eve, state in paths:
        for outcome in MeasBasis.X.outcomes:
            p, _ = project(state, 0, MeasBasis.X, outcome)
            if p > Tolerance.BRANCH:
                yield prob * p, eve, outcome


def intercept_resend_oracle(basis: MeasBasis, segment: Segment) -> AttackOutcomeStats:
    """Check-round error, Key-round mismatch and Eve's information on the key bit.

    Key rounds are weighted uniformly over the four operation pairs; the
    information is conditioned on TP's published outcome.
    """
    check_error = sum(
        prob for prob, _, outcome in enumerate_branches(UnitaryOp.HADAMARD, UnitaryOp.HADAMARD, basis, segment)
        if outcome is Outcome.MINUS
    )

    mismatch = 0.0
    joint = defaultdict(float)
    weight = 1.0 / len(KEY_OP_PAIRS)
    for alice_op, bob_op in KEY_OP_PAIRS:
        expected = expected_outcome(alice_op, bob_op)
        key_bit = derive_alice_bit(alice_op)
        for prob, eve, outcome in enumerate_branches(alice_op, bob_op, basis, segment):
            if outcome is not expected:
                mismatch += weight * prob
            joint[(key_bit, eve, outcome)] += weight * prob

    return AttackOutcomeStats(
        detection_prob_case1=check_error,
        disclosed_mismatch_prob=mismatch,
        leakage_bits=conditional_mutual_information(joint),
    )
