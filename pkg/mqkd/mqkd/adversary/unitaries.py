"""Build U1, U2, U3 from attack parameters by unitary completion."""
from typing import NamedTuple, Sequence

import numpy as np

from mqkd.adversary.params import ANCILLA_QUBITS, AttackParams, InvalidAttackParams
from mqkd.constants import Tolerance
from mqkd.protocol.rounds import SEGMENT_ORDER, Segment
from mqkd.quantum.operators import KET_MINUS, KET_PLUS
from mqkd.quantum.state import StateVector, apply_matrix, tensor, zero_register


class NoUnitaryCompletionError(InvalidAttackParams):
    pass


def _extend_to_basis(columns: np.ndarray) -> np.ndarray:
    """Extend orthonormal ``columns`` to a full basis.

    Gram-Schmidt over the computational basis vectors, taken in index order,
    so the completion is deterministic.
    """
    dim, k = columns.shape
    basis = [columns[:, i] for i in range(k)]
    for index in range(dim):
        if len(basis) == dim:
            break
        candidate = np.zeros(dim, dtype=np.complex128)
        candidate[index] = 1.0
        for vector in basis:
            candidate = candidate - np.vdot(vector, candidate) * vector
        norm = np.linalg.norm(candidate)
        if norm > Tolerance.GRAM_SCHMIDT:
            basis.append(candidate / norm)
    if len(basis) != dim:
        raise NoUnitaryCompletionError(f"Could not extend {k} columns to a basis of dimension {dim}")
    return np.stack(basis, axis=1)


def complete_unitary(inputs: Sequence[np.ndarray], outputs: Sequence[np.ndarray], name: str = 'U') -> np.ndarray:
    """A unitary mapping each of the orthonormal ``inputs`` to the matching output.

    Possible iff the outputs have the same Gram matrix as the inputs.
    """
    x = np.stack([np.asarray(v, dtype=np.complex128) for v in inputs], axis=1)
    y = np.stack([np.asarray(v, dtype=np.complex128) for v in outputs], axis=1)
    if x.shape != y.shape:
        raise ValueError(f"{name}: {x.shape[1]} inputs of dimension {x.shape[0]} vs outputs {y.shape}")
    gram_in = x.conj().T @ x
    if not np.allclose(gram_in, np.eye(x.shape[1]), atol=Tolerance.STATE):
        raise ValueError(f"{name}: specified inputs are not orthonormal")
    gram_out = y.conj().T @ y
    if not np.allclose(gram_out, gram_in, atol=Tolerance.STATE):
        deviation = np.abs(gram_out - gram_in).max()
        raise NoUnitaryCompletionError(
            f"{name}: specified outputs are not orthonormal (max Gram deviation {deviation:.3e}), "
            "no unitary completion exists"
        )
    return _extend_to_basis(y) @ _extend_to_basis(x).conj().T


def _joint(travel: np.ndarray, label: np.ndarray) -> np.ndarray:
    return np.kron(travel, label)


def build_attack_unitaries(params: AttackParams) -> 'AttackUnitaries':
    """The three attack unitaries, each on (travel qubit, its ancilla register)."""
    labels = params.labels
    e_zero = zero_register(ANCILLA_QUBITS[0]).amps
    fg_zero = zero_register(ANCILLA_QUBITS[1]).amps
    hk_zero = zero_register(ANCILLA_QUBITS[2]).amps

    u1 = complete_unitary(
        [_joint(KET_PLUS, e_zero)],
        [params.a1 * _joint(KET_PLUS, labels['e1']) + params.a2 * _joint(KET_MINUS, labels['e2'])],
        name='U1',
    )
    u2 = complete_unitary(
        [_joint(KET_PLUS, fg_zero), _joint(KET_MINUS, fg_zero)],
        [
            params.A1 * _joint(KET_PLUS, labels['F1']) + params.A2 * _joint(KET_MINUS, labels['F2']),
            params.B1 * _joint(KET_PLUS, labels['G1']) + params.B2 * _joint(KET_MINUS, labels['G2']),
        ],
        name='U2',
    )
    u3 = complete_unitary(
        [_joint(KET_PLUS, hk_zero), _joint(KET_MINUS, hk_zero)],
        [
            params.C1 * _joint(KET_PLUS, labels['H1']) + params.C2 * _joint(KET_MINUS, labels['H2']),
            params.D1 * _joint(KET_PLUS, labels['K1']) + params.D2 * _joint(KET_MINUS, labels['K2']),
        ],
        name='U3',
    )
    return AttackUnitaries(u1, u2, u3)


class AttackUnitaries(NamedTuple):
    u1: np.ndarray
    u2: np.ndarray
    u3: np.ndarray

    def for_segment(self, segment: Segment) -> np.ndarray:
        return self[SEGMENT_ORDER.index(segment)]

    def apply(self, segment: Segment, state: StateVector) -> StateVector:
        """Attach the segment's fresh ancilla register and apply its unitary.

        Registers are appended behind the current state, so they must be
        attached in segment order.
        """
        position = SEGMENT_ORDER.index(segment)
        n_qubits = ANCILLA_QUBITS[position]
        expected = 1 + sum(ANCILLA_QUBITS[:position])
        if state.n_qubits != expected:
            raise ValueError(f"{segment.value}: expected a {expected}-qubit state, got {state.n_qubits} qubits")
        joint = tensor(state, zero_register(n_qubits))
        targets = [0] + list(range(expected, expected + n_qubits))
        return apply_matrix(joint, self[position], targets)
