"""Exact evaluation of the collective attack: outcome distributions, detectability and leakage."""
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from mqkd.adversary.hook import AttackOutcomeStats
from mqkd.adversary.information import holevo_quantity
from mqkd.adversary.params import AttackParams
from mqkd.adversary.unitaries import AttackUnitaries, build_attack_unitaries
from mqkd.constants import Tolerance
from mqkd.distill.bits import derive_alice_bit
from mqkd.protocol.rounds import KEY_OP_PAIRS, Segment, expected_outcome
from mqkd.quantum.operators import MeasBasis, Outcome, UnitaryOp
from mqkd.quantum.state import StateVector, apply_op, prepare_plus


@dataclass
class CollectiveRoundResult:
    """TP's outcome distribution and the ancilla state left behind by each outcome.

    ``ancilla_amplitudes`` are unnormalized: their squared norm is the
    outcome's probability.
    """
    final_state: StateVector
    probabilities: Dict[Outcome, float]
    ancilla_amplitudes: Dict[Outcome, np.ndarray]

    def ancilla_state(self, outcome: Outcome) -> Optional[StateVector]:
        prob = self.probabilities[outcome]
        if prob <= Tolerance.BRANCH:
            return None
        return StateVector(self.ancilla_amplitudes[outcome] / np.sqrt(prob), check=False)


def _unitaries(params: AttackParams, unitaries: Optional[AttackUnitaries]) -> AttackUnitaries:
    return build_attack_unitaries(params) if unitaries is None else unitaries


def run_collective_round(
    params: AttackParams,
    alice_op: UnitaryOp,
    bob_op: UnitaryOp,
    unitaries: Optional[AttackUnitaries] = None,
) -> CollectiveRoundResult:
    unitaries = _unitaries(params, unitaries)
    state = prepare_plus()
    state = unitaries.apply(Segment.TP_TO_ALICE, state)
    state = apply_op(state, alice_op, 0)
    state = unitaries.apply(Segment.ALICE_TO_BOB, state)
    state = apply_op(state, bob_op, 0)
    state = unitaries.apply(Segment.BOB_TO_TP, state)

    # travel qubit is the most significant index: rows of this view are its Z components
    rows = state.amps.reshape(2, -1)
    probabilities, amplitudes = {}, {}
    for outcome in MeasBasis.X.outcomes:
        remainder = outcome.ket.conj() @ rows
        probabilities[outcome] = float(np.vdot(remainder, remainder).real)
        amplitudes[outcome] = remainder
    return CollectiveRoundResult(state, probabilities, amplitudes)


def no_detection_residual(params: AttackParams) -> float:
    """Size of everything that lets a Check or Key round come out wrong.

    Zero exactly when a2 = A2 = B1 = C2 = D1 = 0 and A1|F1> = B2|G2>.
    """
    labels = params.labels
    mixed = params.A1 * labels['F1'] - params.B2 * labels['G2']
    terms = [abs(params.a2), abs(params.A2), abs(params.B1), abs(params.C2), abs(params.D1), np.linalg.norm(mixed)]
    return float(np.linalg.norm(terms))


def detection_probability(params: AttackParams, unitaries: Optional[AttackUnitaries] = None) -> float:
    result = run_collective_round(params, UnitaryOp.HADAMARD, UnitaryOp.HADAMARD, _unitaries(params, unitaries))
    return result.probabilities[Outcome.MINUS]


def mismatch_probability(params: AttackParams, unitaries: Optional[AttackUnitaries] = None) -> float:
    unitaries = _unitaries(params, unitaries)
    total = 0.0
    for alice_op, bob_op in KEY_OP_PAIRS:
        result = run_collective_round(params, alice_op, bob_op, unitaries)
        expected = expected_outcome(alice_op, bob_op)
        total += 1.0 - result.probabilities[expected]
    return total / len(KEY_OP_PAIRS)


def eve_leakage(params: AttackParams, unitaries: Optional[AttackUnitaries] = None) -> float:
    """Holevo information between the key bit and TP's ancillas, given the published outcome.

    The four Key-round operation pairs are equally likely.
    """
    unitaries = _unitaries(params, unitaries)
    weight = np.sqrt(1.0 / len(KEY_OP_PAIRS))
    ensembles = {outcome: {0: [], 1: []} for outcome in MeasBasis.X.outcomes}
    for alice_op, bob_op in KEY_OP_PAIRS:
        result = run_collective_round(params, alice_op, bob_op, unitaries)
        for outcome, amplitudes in result.ancilla_amplitudes.items():
            ensembles[outcome][derive_alice_bit(alice_op)].append(weight * amplitudes)
    leakage = 0.0
    for ensemble in ensembles.values():
        prob, chi = holevo_quantity(ensemble)
        leakage += prob * chi
    return float(min(max(leakage, 0.0), 1.0))


def collective_statistics(params: AttackParams) -> AttackOutcomeStats:
    unitaries = build_attack_unitaries(params)
    return AttackOutcomeStats(
        detection_prob_case1=detection_probability(params, unitaries),
        disclosed_mismatch_prob=mismatch_probability(params, unitaries),
        leakage_bits=eve_leakage(params, unitaries),
    )
