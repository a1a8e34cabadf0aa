"""Define constant values used across the project."""
from fractions import Fraction


class Tolerance(object):
    # state invariants (norms, unitarity of runtime matrices)
    STATE = 1e-9
    # static matrix identities (H·H = I, Table-1 transitions)
    STATIC = 1e-12
    # branch probabilities at or below this are never selected by a measurement
    BRANCH = 1e-12
    # Gram-Schmidt residuals below this are treated as linearly dependent
    GRAM_SCHMIDT = 1e-8


class ExitCode(object):
    SUCCESS = 0
    ABORTED = 2
    CONFIG_ERROR = 3


class Efficiency(object):
    """Qubit efficiencies Q = n/m of the compared three-party protocols."""
    PROPOSED = Fraction(2, 9)
    HWANG = Fraction(1, 9)
    YANG = Fraction(1, 12)
    DEVIATION_TOLERANCE = 0.01


class Defaults(object):
    SEED = 2024
    N_ROUNDS = 90000
    CASE1_THRESHOLD = 0.0
    DISCLOSURE_TOLERANCE = 0
    ATTACK_ROUNDS = 10000


class RecordType(object):
    """Values of the `type` field in transcript lines."""
    SESSION = 'session'
    ROUND = 'round'
    ERROR_REPORT = 'error_report'
