"""
Parameters of the three-unitary collective attack.

TP's unitaries act on the travel qubit and a fresh ancilla register each:

    U1 |+>|E1> = a1 |+>|e1> + a2 |->|e2>
    U2 |+>|E2> = A1 |+>|F1> + A2 |->|F2>,   U2 |->|E2> = B1 |+>|G1> + B2 |->|G2>
    U3 |+>|E3> = C1 |+>|H1> + C2 |->|H2>,   U3 |->|E3> = D1 |+>|K1> + D2 |->|K2>

The labels are explicit vectors of their register (E1 has one qubit, E2 and
E3 have two). Each label pair written on one line above must be orthonormal.
"""
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional

import numpy as np
from configargparse import DefaultConfigFileParser

from mqkd.constants import Tolerance

COEFFICIENT_PAIRS = (('a1', 'a2'), ('A1', 'A2'), ('B1', 'B2'), ('C1', 'C2'), ('D1', 'D2'))
COEFFICIENTS = tuple(name for pair in COEFFICIENT_PAIRS for name in pair)
LABEL_FAMILIES = (('e1', 'e2'), ('F1', 'F2'), ('G1', 'G2'), ('H1', 'H2'), ('K1', 'K2'))
LABELS = tuple(name for family in LABEL_FAMILIES for name in family)

# qubits of the E1, E2 and E3 registers, in order of attachment
ANCILLA_QUBITS = (1, 2, 2)
_LABEL_QUBITS = {'e': ANCILLA_QUBITS[0], 'F': ANCILLA_QUBITS[1], 'G': ANCILLA_QUBITS[1],
                 'H': ANCILLA_QUBITS[2], 'K': ANCILLA_QUBITS[2]}

LAYOUTS = ('shared', 'shared_fg', 'distinct')
# layouts on which A1 F1 = B2 G2 can hold, i.e. undetectable attacks exist
UNDETECTABLE_LAYOUTS = ('shared', 'shared_fg')

# register basis columns taken by (F1, F2, G1, G2) and by (H1, H2, K1, K2)
_LAYOUT_ORDERS = {
    'shared': ((0, 1, 1, 0), (0, 1, 1, 0)),
    'shared_fg': ((0, 1, 1, 0), (0, 1, 2, 3)),
    'distinct': ((0, 1, 2, 3), (0, 1, 2, 3)),
}


class InvalidAttackParams(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``re,im`` (or a bare real) into a complex number."""
    parts = [part.strip() for part in str(text).split(',')]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise InvalidAttackParams(f"Cannot parse complex value {text!r}, expected 're,im'")


def format_complex(value: complex) -> str:
    return f'{value.real!r},{value.imag!r}'


def parse_vector(text: str) -> np.ndarray:
    """Parse a flat ``re,im,re,im,...`` list into a complex vector."""
    try:
        flat = [float(part) for part in str(text).split(',')]
    except ValueError:
        raise InvalidAttackParams(f"Cannot parse label vector {text!r}")
    if len(flat) % 2:
        raise InvalidAttackParams(f"Label vector {text!r} has an odd number of real entries")
    return np.array(flat[0::2], dtype=np.float64) + 1j * np.array(flat[1::2], dtype=np.float64)


def format_vector(vector: np.ndarray) -> str:
    return ','.join(format_complex(complex(x)) for x in vector)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a complex Gaussian matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def layout_labels(layout: str, e_basis=None, fg_basis=None, hk_basis=None) -> Dict[str, np.ndarray]:
    """Label vectors of a named layout, taken from the columns of the given register bases.

    ``shared``: F1 = G2, F2 = G1, H1 = K2 and H2 = K1 (TP can not tell an
    unchanged qubit from a twice-flipped one). ``shared_fg``: F and G as in
    ``shared``, while H1, H2, K1 and K2 are mutually orthonormal, so the last
    ancilla records which X state Bob sent back. ``distinct``: the four labels
    of each register are mutually orthonormal.
    """
    if layout not in LAYOUTS:
        raise InvalidAttackParams(f"Unknown label layout {layout!r}, expected one of {LAYOUTS}")
    e_basis = np.eye(2, dtype=np.complex128) if e_basis is None else e_basis
    fg_basis = np.eye(4, dtype=np.complex128) if fg_basis is None else fg_basis
    hk_basis = np.eye(4, dtype=np.complex128) if hk_basis is None else hk_basis
    labels = {'e1': e_basis[:, 0], 'e2': e_basis[:, 1]}
    families = ((('F', 'G'), fg_basis), (('H', 'K'), hk_basis))
    for ((first, second), basis), order in zip(families, _LAYOUT_ORDERS[layout]):
        labels[f'{first}1'] = basis[:, order[0]]
        labels[f'{first}2'] = basis[:, order[1]]
        labels[f'{second}1'] = basis[:, order[2]]
        labels[f'{second}2'] = basis[:, order[3]]
    return {name: np.array(vector, dtype=np.complex128) for name, vector in labels.items()}


def _random_pair(rng: np.random.Generator):
    z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    z = z / np.linalg.norm(z)
    return complex(z[0]), complex(z[1])


def _random_phase(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


@dataclass(frozen=True)
class AttackParams:
    """Coefficients and ancilla labels of U1, U2 and U3."""
    a1: complex = 1.0
    a2: complex = 0.0
    A1: complex = 1.0
    A2: complex = 0.0
    B1: complex = 0.0
    B2: complex = 1.0
    C1: complex = 1.0
    C2: complex = 0.0
    D1: complex = 0.0
    D2: complex = 1.0
    labels: Dict[str, np.ndarray] = field(default_factory=lambda: layout_labels('shared'), compare=False)
    layout: str = 'shared'
    source: str = 'custom'

    def __post_init__(self):
        for name in COEFFICIENTS:
            object.__setattr__(self, name, complex(getattr(self, name)))
        labels = {name: np.asarray(v, dtype=np.complex128) for name, v in self.labels.items()}
        object.__setattr__(self, 'labels', labels)
        self.validate()

    def validate(self):
        for name in COEFFICIENTS:
            if not np.isfinite(getattr(self, name)):
                raise InvalidAttackParams(f"Coefficient {name} is not finite")
        for first, second in COEFFICIENT_PAIRS:
            norm = abs(getattr(self, first)) ** 2 + abs(getattr(self, second)) ** 2
            if abs(norm - 1.0) > Tolerance.STATE:
                raise InvalidAttackParams(f"|{first}|^2 + |{second}|^2 = {norm!r}, expected 1")
        missing = [name for name in LABELS if name not in self.labels]
        if missing:
            raise InvalidAttackParams(f"Missing ancilla labels {missing}")
        for name in LABELS:
            expected = 1 << _LABEL_QUBITS[name[0]]
            if self.labels[name].shape != (expected,):
                raise InvalidAttackParams(f"Label {name} must have {expected} entries, got {self.labels[name].shape}")
        for first, second in LABEL_FAMILIES:
            family = np.stack([self.labels[first], self.labels[second]], axis=1)
            gram = family.conj().T @ family
            if not np.allclose(gram, np.eye(2), atol=Tolerance.STATE):
                raise InvalidAttackParams(
                    f"Labels {first}, {second} are not orthonormal (Gram {gram.round(6).tolist()})"
                )

    def coefficients(self) -> Dict[str, complex]:
        return {name: getattr(self, name) for name in COEFFICIENTS}

    @classmethod
    def pass_through(cls) -> 'AttackParams':
        """Attack that marks nothing: all three unitaries leave the travel qubit alone."""
        return cls(source='pass_through')

    @classmethod
    def random(
        cls,
        rng: np.random.Generator,
        on_manifold: bool = False,
        layout: str = 'shared',
        random_basis: bool = True,
    ) -> 'AttackParams':
        """Sample parameters for property campaigns.

        With ``on_manifold`` every coefficient that would disturb a Check or
        Key round vanishes (a2 = A2 = B1 = C2 = D1 = 0, A1 = B2), leaving only
        free phases; this needs a layout with F1 = G2 (``shared`` or ``shared_fg``).
        """
        if on_manifold and layout not in UNDETECTABLE_LAYOUTS:
            raise InvalidAttackParams(
                f"Undetectable parameters exist only for the {UNDETECTABLE_LAYOUTS} label layouts, got {layout!r}"
            )
        if random_basis:
            labels = layout_labels(layout, random_unitary(rng, 2), random_unitary(rng, 4), random_unitary(rng, 4))
        else:
            labels = layout_labels(layout)
        if on_manifold:
            a1, A1, C1, D2 = (_random_phase(rng) for _ in range(4))
            values = dict(a1=a1, a2=0.0, A1=A1, A2=0.0, B1=0.0, B2=A1, C1=C1, C2=0.0, D1=0.0, D2=D2)
        else:
            values = {}
            for first, second in COEFFICIENT_PAIRS:
                values[first], values[second] = _random_pair(rng)
        return cls(labels=labels, layout=layout, source='random', **values)

    def with_overrides(self, **overrides) -> 'AttackParams':
        """Copy with some coefficients replaced.

        When only one member of a pair is given, its partner keeps its phase and
        has its modulus renormalized.
        """
        unknown = set(overrides) - set(COEFFICIENTS)
        if unknown:
            raise InvalidAttackParams(f"Unknown coefficients {sorted(unknown)}")
        values = self.coefficients()
        values.update({name: complex(value) for name, value in overrides.items()})
        for first, second in COEFFICIENT_PAIRS:
            if (first in overrides) == (second in overrides):
                continue
            given, partner = (first, second) if first in overrides else (second, first)
            rest = 1.0 - abs(values[given]) ** 2
            if rest < -Tolerance.STATE:
                raise InvalidAttackParams(f"|{given}| = {abs(values[given])!r} exceeds 1")
            old = values[partner]
            phase = old / abs(old) if abs(old) > Tolerance.STATIC else 1.0
            values[partner] = phase * np.sqrt(max(rest, 0.0))
        return replace(self, source='custom', **values)

    @classmethod
    def from_items(cls, items: Dict[str, str], source: str = 'custom') -> 'AttackParams':
        items = dict(items)
        layout = items.pop('layout', 'shared')
        basis_seed = items.pop('basis_seed', None)
        if basis_seed is not None:
            rng = np.random.default_rng(int(basis_seed))
            labels = layout_labels(layout, random_unitary(rng, 2), random_unitary(rng, 4), random_unitary(rng, 4))
        else:
            labels = layout_labels(layout)
        values = {}
        for key, text in items.items():
            if key in COEFFICIENTS:
                values[key] = parse_complex(text)
            elif key in LABELS:
                labels[key] = parse_vector(text)
            else:
                raise InvalidAttackParams(f"Unknown attack parameter {key!r}")
        base = cls(labels=labels, layout=layout, source=source)
        return replace(base.with_overrides(**values), source=source)

    @classmethod
    def from_file(cls, path: str) -> 'AttackParams':
        """Read ``key = value`` lines; complex values are written ``re,im``."""
        with open(path, 'r', encoding='utf-8') as f:
            items = DefaultConfigFileParser().parse(f)
        return cls.from_items(items, source=path)

    def to_lines(self) -> List[str]:
        lines = [f'layout = {self.layout}']
        lines += [f'{name} = {format_complex(getattr(self, name))}' for name in COEFFICIENTS]
        lines += [f'{name} = {format_vector(self.labels[name])}' for name in LABELS]
        return lines

    def save(self, path: str):
        with open(path, 'w', encoding='utf-8') as f:
            for line in self.to_lines():
                f.write(line + '\n')


def deviation_params(name: str, value: complex, base: Optional[AttackParams] = None) -> AttackParams:
    """Pass-through parameters (or ``base``) with a single coefficient moved."""
    base = AttackParams.pass_through() if base is None else base
    return base.with_overrides(**{name: value})
