"""Module defining the exact qubit algebra."""
from mqkd.quantum.operators import MeasBasis, Outcome, UnitaryOp, OP_ALPHABET
from mqkd.quantum.state import (
    ComplexAmp,
    NonUnitaryError,
    RegisterIndexError,
    StateVector,
    apply_matrix,
    apply_op,
    basis_state,
    fidelity,
    is_unitary,
    ket,
    measure,
    measurement_probabilities,
    prepare_plus,
    project,
    tensor,
    zero_register,
)

__all__ = [
    "MeasBasis",
    "Outcome",
    "UnitaryOp",
    "OP_ALPHABET",
    "ComplexAmp",
    "NonUnitaryError",
    "RegisterIndexError",
    "StateVector",
    "apply_matrix",
    "apply_op",
    "basis_state",
    "fidelity",
    "is_unitary",
    "ket",
    "measure",
    "measurement_probabilities",
    "prepare_plus",
    "project",
    "tensor",
    "zero_register",
]
