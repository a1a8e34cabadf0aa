"""Entropies for the leakage metrics, in bits."""
from collections import defaultdict
from typing import Dict, Hashable, Sequence, Tuple

import numpy as np

from mqkd.constants import Tolerance


def shannon_entropy(probs) -> float:
    probs = np.asarray([p for p in probs if p > Tolerance.BRANCH], dtype=np.float64)
    if probs.size == 0:
        return 0.0
    probs = probs / probs.sum()
    return float(-(probs * np.log2(probs)).sum())


def _marginal(joint: Dict[Tuple, float], keep: Sequence[int]) -> Dict[Tuple, float]:
    marginal = defaultdict(float)
    for outcome, prob in joint.items():
        marginal[tuple(outcome[i] for i in keep)] += prob
    return marginal


def conditional_mutual_information(joint: Dict[Tuple[Hashable, Hashable, Hashable], float]) -> float:
    """I(X; Y | Z) of a joint distribution keyed by (x, y, z)."""
    h_xz = shannon_entropy(_marginal(joint, (0, 2)).values())
    h_yz = shannon_entropy(_marginal(joint, (1, 2)).values())
    h_xyz = shannon_entropy(joint.values())
    h_z = shannon_entropy(_marginal(joint, (2,)).values())
    return max(h_xz + h_yz - h_xyz - h_z, 0.0)


def von_neumann_entropy(vectors: Sequence[np.ndarray]) -> float:
    """Entropy of the normalized mixture sum_i |v_i><v_i| of unnormalized pure states.

    The nonzero spectrum of the mixture equals the spectrum of the Gram
    matrix of the vectors, which is at most as large as the ensemble.
    """
    vectors = [np.asarray(v, dtype=np.complex128) for v in vectors]
    if not vectors:
        return 0.0
    stacked = np.stack(vectors, axis=1)
    gram = stacked.conj().T @ stacked
    trace = float(np.trace(gram).real)
    if trace <= Tolerance.BRANCH:
        return 0.0
    eigenvalues = np.linalg.eigvalsh(gram / trace)
    return shannon_entropy(np.clip(eigenvalues, 0.0, None))


def holevo_quantity(ensemble: Dict[Hashable, Sequence[np.ndarray]]) -> Tuple[float, float]:
    """Holevo information between a classical label and quantum states.

    ``ensemble`` maps each label value to unnormalized pure states whose
    squared norms are their joint probabilities. Returns the total weight of
    the ensemble and its Holevo quantity.
    """
    weights = {label: sum(float(np.vdot(v, v).real) for v in vectors) for label, vectors in ensemble.items()}
    total = sum(weights.values())
    if total <= Tolerance.BRANCH:
        return 0.0, 0.0
    everything = [v for vectors in ensemble.values() for v in vectors]
    chi = von_neumann_entropy(everything)
    for label, vectors in ensemble.items():
        if weights[label] > Tolerance.BRANCH:
            chi -= weights[label] / total * von_neumann_entropy(vectors)
    return total, max(chi, 0.0)
