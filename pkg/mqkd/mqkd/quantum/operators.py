"""Single-photon operators, measurement bases and outcomes."""
from enum import Enum

import numpy as np

SQRT1_2 = 1.0 / np.sqrt(2.0)

KET_0 = np.array([1.0, 0.0], dtype=np.complex128)
KET_1 = np.array([0.0, 1.0], dtype=np.complex128)
KET_PLUS = np.array([SQRT1_2, SQRT1_2], dtype=np.complex128)
KET_MINUS = np.array([SQRT1_2, -SQRT1_2], dtype=np.complex128)

IDENTITY_MATRIX = np.eye(2, dtype=np.complex128)
PAULI_Z_MATRIX = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
HADAMARD_MATRIX = SQRT1_2 * np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128)

for _matrix in (IDENTITY_MATRIX, PAULI_Z_MATRIX, HADAMARD_MATRIX, KET_0, KET_1, KET_PLUS, KET_MINUS):
    _matrix.setflags(write=False)


class UnitaryOp(Enum):
    """The operations a lightweight participant can apply to the travel qubit."""
    IDENTITY = 'I'
    PAULI_Z = 'Z'
    HADAMARD = 'H'

    @property
    def matrix(self) -> np.ndarray:
        return _OP_MATRICES[self]

    @classmethod
    def from_tag(cls, tag: str) -> 'UnitaryOp':
        aliases = {'I': cls.IDENTITY, 'Z': cls.PAULI_Z, 'SZ': cls.PAULI_Z, 'H': cls.HADAMARD}
        try:
            return aliases[tag.strip().upper()]
        except KeyError:
            raise ValueError(f"Unknown operation tag {tag!r}, expected one of I, Z, H")


_OP_MATRICES = {
    UnitaryOp.IDENTITY: IDENTITY_MATRIX,
    UnitaryOp.PAULI_Z: PAULI_Z_MATRIX,
    UnitaryOp.HADAMARD: HADAMARD_MATRIX,
}

# Choice order for uniform draws: u in [k/3, (k+1)/3) selects OP_ALPHABET[k].
OP_ALPHABET = (UnitaryOp.IDENTITY, UnitaryOp.PAULI_Z, UnitaryOp.HADAMARD)


class Outcome(Enum):
    PLUS = '+'
    MINUS = '-'
    ZERO = '0'
    ONE = '1'

    @property
    def basis(self) -> 'MeasBasis':
        return MeasBasis.X if self in (Outcome.PLUS, Outcome.MINUS) else MeasBasis.Z

    @property
    def ket(self) -> np.ndarray:
        return _OUTCOME_KETS[self]


_OUTCOME_KETS = {
    Outcome.PLUS: KET_PLUS,
    Outcome.MINUS: KET_MINUS,
    Outcome.ZERO: KET_0,
    Outcome.ONE: KET_1,
}


class MeasBasis(Enum):
    X = 'X'
    Z = 'Z'

    @property
    def outcomes(self):
        """Branch order used when selecting an outcome: Plus/Zero first."""
        if self is MeasBasis.X:
            return (Outcome.PLUS, Outcome.MINUS)
        return (Outcome.ZERO, Outcome.ONE)

    @property
    def projectors(self):
        return tuple(np.outer(outcome.ket, outcome.ket.conj()) for outcome in self.outcomes)

    @classmethod
    def from_tag(cls, tag: str) -> 'MeasBasis':
        try:
            return cls(tag.strip().upper())
        except ValueError:
            raise ValueError(f"Unknown measurement basis {tag!r}, expected X or Z")
