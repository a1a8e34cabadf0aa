"""
Term-by-term expansion of a collective-attack round.

Each term is a coefficient, the X-basis label of the travel qubit and the
ancilla labels attached so far. The expansion uses only the defining
relations of U1, U2 and U3, never their matrices, and serves as an
independent check of the state-vector evolution.
"""
from typing import Dict, List, Tuple

import numpy as np

from mqkd.adversary.params import AttackParams
from mqkd.quantum.operators import SQRT1_2, Outcome, UnitaryOp

Term = Tuple[complex, Outcome, Tuple[str, ...]]

PLUS, MINUS = Outcome.PLUS, Outcome.MINUS


def _attack_rules(params: AttackParams) -> List[Dict[Outcome, List[Tuple[complex, Outcome, str]]]]:
    return [
        {PLUS: [(params.a1, PLUS, 'e1'), (params.a2, MINUS, 'e2')]},
        {
            PLUS: [(params.A1, PLUS, 'F1'), (params.A2, MINUS, 'F2')],
            MINUS: [(params.B1, PLUS, 'G1'), (params.B2, MINUS, 'G2')],
        },
        {
            PLUS: [(params.C1, PLUS, 'H1'), (params.C2, MINUS, 'H2')],
            MINUS: [(params.D1, PLUS, 'K1'), (params.D2, MINUS, 'K2')],
        },
    ]


def _attack(terms: List[Term], rules) -> List[Term]:
    expanded = []
    for coef, travel, labels in terms:
        if travel not in rules:
            raise ValueError(f"Attack relation undefined for travel state {travel.value}")
        for factor, new_travel, label in rules[travel]:
            expanded.append((coef * factor, new_travel, labels + (label,)))
    return expanded


def _participant(terms: List[Term], op: UnitaryOp) -> List[Term]:
    if op is UnitaryOp.IDENTITY:
        return list(terms)
    if op is UnitaryOp.PAULI_Z:
        # sigma_z swaps |+> and |->
        return [(coef, MINUS if travel is PLUS else PLUS, labels) for coef, travel, labels in terms]
    # H|+> = (|+> + |->)/sqrt2, H|-> = (|+> - |->)/sqrt2
    expanded = []
    for coef, travel, labels in terms:
        sign = 1.0 if travel is PLUS else -1.0
        expanded.append((coef * SQRT1_2, PLUS, labels))
        expanded.append((sign * coef * SQRT1_2, MINUS, labels))
    return expanded


def expand_round(params: AttackParams, alice_op: UnitaryOp, bob_op: UnitaryOp) -> List[Term]:
    first, second, third = _attack_rules(params)
    terms = [(1.0 + 0.0j, PLUS, ())]
    terms = _attack(terms, first)
    terms = _participant(terms, alice_op)
    terms = _attack(terms, second)
    terms = _participant(terms, bob_op)
    return _attack(terms, third)


def _overlap(params: AttackParams, left: Tuple[str, ...], right: Tuple[str, ...]) -> complex:
    overlap = 1.0 + 0.0j
    for a, b in zip(left, right):
        overlap *= np.vdot(params.labels[a], params.labels[b])
    return overlap


def expansion_distribution(params: AttackParams, alice_op: UnitaryOp, bob_op: UnitaryOp) -> Dict[Outcome, float]:
    """P(TP sees |+>) and P(TP sees |->) evaluated from the term expansion."""
    terms = expand_round(params, alice_op, bob_op)
    distribution = {}
    for outcome in (PLUS, MINUS):
        selected = [(coef, labels) for coef, travel, labels in terms if travel is outcome]
        total = 0.0 + 0.0j
        for coef_i, labels_i in selected:
            for coef_j, labels_j in selected:
                total += np.conj(coef_i) * coef_j * _overlap(params, labels_i, labels_j)
        distribution[outcome] = float(total.real)
    return distribution
