"""Key-bit rules of Key rounds: Alice reads her operation, Bob reads his operation and TP's outcome."""
from mqkd.quantum.operators import Outcome, UnitaryOp

_ALICE_BITS = {UnitaryOp.IDENTITY: 0, UnitaryOp.PAULI_Z: 1}


def _require_key_op(op: UnitaryOp, who: str):
    if op not in _ALICE_BITS:
        raise ValueError(f"{who}'s operation {op.name} does not carry a key bit (expected IDENTITY or PAULI_Z)")


def derive_alice_bit(op: UnitaryOp) -> int:
    _require_key_op(op, 'Alice')
    return _ALICE_BITS[op]


def derive_bob_bit(op: UnitaryOp, outcome: Outcome) -> int:
    """Bob infers Alice's operation: same as his own iff TP saw |+>."""
    _require_key_op(op, 'Bob')
    if outcome not in (Outcome.PLUS, Outcome.MINUS):
        raise ValueError(f"TP publishes X-basis outcomes only, got {outcome}")
    if outcome is Outcome.PLUS:
        inferred = op
    else:
        inferred = UnitaryOp.PAULI_Z if op is UnitaryOp.IDENTITY else UnitaryOp.IDENTITY
    return derive_alice_bit(inferred)
