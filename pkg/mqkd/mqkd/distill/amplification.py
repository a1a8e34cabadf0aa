"""Privacy amplification by Toeplitz hashing over GF(2)."""
import math
from typing import Optional, Sequence

import numpy as np

from mqkd.utils.logging import logger


def _as_bits(bits: Sequence[int], what: str) -> np.ndarray:
    array = np.asarray(bits, dtype=np.int64).reshape(-1)
    if array.size and not np.isin(array, (0, 1)).all():
        raise ValueError(f"{what} must contain only 0 and 1")
    return array


def toeplitz_matrix(hash_seed: Sequence[int], n_bits: int, out_len: int) -> np.ndarray:
    """The (out_len x n_bits) matrix T[i, j] = seed[i - j + n_bits - 1]."""
    seed = _as_bits(hash_seed, 'hash seed')
    rows = np.arange(out_len)[:, None]
    cols = np.arange(n_bits)[None, :]
    return seed[rows - cols + n_bits - 1].astype(np.uint8)


def privacy_amplify(bits: Sequence[int], hash_seed: Sequence[int], out_len: int) -> np.ndarray:
    """Compress ``bits`` to ``out_len`` bits with the Toeplitz matrix built from ``hash_seed``.

    The seed must hold ``len(bits) + out_len - 1`` bits; for ``out_len = 0``
    the result is empty whatever the seed.
    """
    bits = _as_bits(bits, 'key bits')
    n_bits = bits.size
    if out_len < 0 or out_len > n_bits:
        raise ValueError(f"out_len must be in [0, {n_bits}], got {out_len}")
    if out_len == 0:
        return np.zeros(0, dtype=np.uint8)
    seed = _as_bits(hash_seed, 'hash seed')
    if seed.size != n_bits + out_len - 1:
        raise ValueError(f"Hash seed must have {n_bits + out_len - 1} bits, got {seed.size}")
    # row i of T.x is entry i + n - 1 of the full convolution of seed and x
    product = np.convolve(seed, bits)[n_bits - 1:n_bits - 1 + out_len]
    return (product % 2).astype(np.uint8)


def output_length(n_bits: int, observed_error_rate: float, override: Optional[int] = None) -> int:
    """floor((1 - 2 e) n), at least 0; an explicit override is capped at ``n_bits``."""
    if override is not None:
        if override > n_bits:
            logger.warning(f"Requested {override} amplified bits but only {n_bits} remain; using {n_bits}")
        return max(0, min(int(override), n_bits))
    return max(0, math.floor((1.0 - 2.0 * observed_error_rate) * n_bits))


def draw_hash_seed(rng: np.random.Generator, n_bits: int, out_len: int) -> np.ndarray:
    if out_len == 0:
        return np.zeros(0, dtype=np.uint8)
    return rng.integers(0, 2, size=n_bits + out_len - 1, dtype=np.uint8)
