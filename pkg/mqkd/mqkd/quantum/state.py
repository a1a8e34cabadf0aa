"""
Exact state-vector algebra over a handful of qubits.

Qubit 0 is the most significant index of the amplitude vector, so that
``tensor(a, b)`` puts the registers of ``a`` before those of ``b``. The travel
qubit is always qubit 0; ancilla registers are appended behind it.
States are immutable: operations return new StateVectors, and measurement
branches are computed once per state and shared.
"""
from typing import Optional, Sequence, Tuple

import numpy as np

from mqkd.constants import Tolerance
from mqkd.quantum.operators import KET_PLUS, MeasBasis, Outcome, UnitaryOp

# Amplitudes are Python/numpy complex numbers; kept as a name for readability.
ComplexAmp = complex


class RegisterIndexError(IndexError):
    pass


class NonUnitaryError(ValueError):
    pass


class StateVector(object):
    """Normalized pure state of ``n_qubits`` qubits."""

    __slots__ = ['amps', '_branches']

    def __init__(self, amps, check=True):
        amps = np.array(amps, dtype=np.complex128).reshape(-1)
        if check:
            dim = amps.shape[0]
            if dim < 2 or dim & (dim - 1):
                raise ValueError(f"State dimension must be a power of 2 (>= 2), got {dim}")
            if not np.all(np.isfinite(amps)):
                raise ValueError("State amplitudes must be finite")
            norm = np.vdot(amps, amps).real
            if abs(norm - 1.0) > Tolerance.STATE:
                raise ValueError(f"State is not normalized: squared norm {norm!r}")
        amps.setflags(write=False)
        self.amps = amps
        # (target, basis) -> measurement branches, filled by _branch_table
        self._branches = {}

    @classmethod
    def _wrap(cls, amps: np.ndarray) -> 'StateVector':
        """Adopt a freshly computed complex vector without copying or checking it."""
        state = cls.__new__(cls)
        amps.setflags(write=False)
        state.amps = amps
        state._branches = {}
        return state

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    @property
    def n_qubits(self) -> int:
        return self.dim.bit_length() - 1

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amps, self.amps).real))

    def __repr__(self):
        return f'StateVector(n_qubits={self.n_qubits}, amps={np.array2string(self.amps, precision=4)})'


def basis_state(outcome: Outcome) -> StateVector:
    return StateVector(outcome.ket, check=False)


def zero_register(n_qubits: int) -> StateVector:
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(amps, check=False)


def prepare_plus() -> StateVector:
    """TP's source state |+> = (|0> + |1>)/sqrt(2)."""
    return StateVector(KET_PLUS, check=False)


def _check_targets(state: StateVector, targets: Sequence[int]):
    n = state.n_qubits
    for target in targets:
        if not 0 <= target < n:
            raise RegisterIndexError(f"Register index {target} out of range for a {n}-qubit state")
    if len(set(targets)) != len(targets):
        raise RegisterIndexError(f"Duplicate register indices in {list(targets)}")


def _apply(state: StateVector, matrix: np.ndarray, targets: Sequence[int]) -> StateVector:
    n = state.n_qubits
    if n == 1:
        return StateVector._wrap(matrix @ state.amps)
    k = len(targets)
    if k == n and list(targets) == list(range(n)):
        return StateVector._wrap(matrix @ state.amps)
    psi = state.amps.reshape([2] * n)
    psi = np.moveaxis(psi, list(targets), list(range(k)))
    shape = psi.shape
    psi = (matrix @ psi.reshape(1 << k, -1)).reshape(shape)
    psi = np.moveaxis(psi, list(range(k)), list(targets))
    return StateVector._wrap(np.ascontiguousarray(psi).reshape(-1))


def is_unitary(matrix: np.ndarray, atol: float = Tolerance.STATE) -> bool:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return bool(np.allclose(matrix.conj().T @ matrix, np.eye(matrix.shape[0]), atol=atol))


def apply_op(state: StateVector, op: UnitaryOp, target: int = 0) -> StateVector:
    """Apply one of {I, sigma_z, H} to a single register."""
    _check_targets(state, [target])
    return _apply(state, op.matrix, [target])


def apply_matrix(state: StateVector, matrix, targets: Sequence[int]) -> StateVector:
    """Apply a unitary acting on ``targets``; ``targets[0]`` is its most significant qubit."""
    targets = list(targets)
    _check_targets(state, targets)
    matrix = np.asarray(matrix, dtype=np.complex128)
    expected = 1 << len(targets)
    if matrix.shape != (expected, expected):
        raise ValueError(f"Matrix shape {matrix.shape} does not act on {len(targets)} register(s)")
    if not is_unitary(matrix):
        deviation = np.abs(matrix.conj().T @ matrix - np.eye(expected)).max()
        raise NonUnitaryError(f"Matrix is not unitary (max |U^dag U - I| = {deviation:.3e})")
    return _apply(state, matrix, targets)


def tensor(a: StateVector, b: StateVector) -> StateVector:
    return StateVector(np.kron(a.amps, b.amps), check=False)


def _split(state: StateVector, target: int) -> np.ndarray:
    """View the state as a (2, rest) matrix with ``target`` as the row index."""
    n = state.n_qubits
    if n == 1:
        return state.amps.reshape(2, 1)
    psi = np.moveaxis(state.amps.reshape([2] * n), target, 0)
    return psi.reshape(2, -1)


def _merge(rows: np.ndarray, n: int, target: int) -> np.ndarray:
    if n == 1:
        return rows.reshape(-1)
    psi = np.moveaxis(rows.reshape([2] * n), 0, target)
    return psi.reshape(-1)


Branch = Tuple[Outcome, float, Optional[StateVector]]


def _branch_table(state: StateVector, target: int, basis: MeasBasis) -> Tuple[Branch, Branch]:
    """(outcome, probability, post-state) of both outcomes, Plus/Zero first.

    The post-state is None for a branch at or below the branch tolerance.
    Tables are cached on the (immutable) state.
    """
    key = (target, basis)
    table = state._branches.get(key)
    if table is None:
        _check_targets(state, [target])
        n = state.n_qubits
        rows = _split(state, target)
        branches = []
        for outcome in basis.outcomes:
            remainder = outcome.ket.conj() @ rows
            prob = float(np.vdot(remainder, remainder).real)
            post = None
            if prob > Tolerance.BRANCH:
                post = StateVector._wrap(_merge(np.outer(outcome.ket, remainder / np.sqrt(prob)), n, target))
            branches.append((outcome, prob, post))
        table = state._branches[key] = tuple(branches)
    return table


def measurement_probabilities(state: StateVector, target: int, basis: MeasBasis) -> Tuple[float, float]:
    first, second = _branch_table(state, target, basis)
    return first[1], second[1]


def project(state: StateVector, target: int, basis: MeasBasis, outcome: Outcome):
    """Return (probability, post-measurement state) for one outcome.

    The post-measurement state is None for a zero-probability branch.
    """
    table = _branch_table(state, target, basis)
    if outcome.basis is not basis:
        raise ValueError(f"Outcome {outcome} does not belong to basis {basis}")
    for candidate, prob, post in table:
        if candidate is outcome:
            return prob, post


def measure(state: StateVector, target: int, basis: MeasBasis, rand: float) -> Tuple[Outcome, StateVector]:
    """Projective measurement of one register, Born rule against ``rand`` in [0, 1).

    The first outcome of the basis (Plus/Zero) is selected when ``rand`` falls
    below its probability. A branch of (numerically) zero probability is never
    selected.
    """
    (first, p_first, post_first), (second, p_second, post_second) = _branch_table(state, target, basis)
    if p_first <= Tolerance.BRANCH:
        return second, post_second
    if p_second <= Tolerance.BRANCH or rand < p_first:
        return first, post_first
    return second, post_second


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2, i.e. equality up to global phase."""
    if a.dim != b.dim:
        raise ValueError(f"Dimension mismatch: {a.dim} vs {b.dim}")
    return float(abs(np.vdot(a.amps, b.amps)) ** 2)


def ket(*amplitudes) -> StateVector:
    """Build a (checked) state from explicit amplitudes."""
    return StateVector(np.asarray(amplitudes, dtype=np.complex128))
