"""Key files: a ``bits=<n>`` header line followed by the key as lowercase hex."""
from typing import Sequence

import numpy as np


def key_to_hex(bits: Sequence[int]) -> str:
    """Pack bits MSB-first into lowercase hex, zero padded to a whole byte."""
    array = np.asarray(bits, dtype=np.uint8).reshape(-1)
    if array.size == 0:
        return ''
    return np.packbits(array).tobytes().hex()


def hex_to_key(hex_string: str, n_bits: int) -> np.ndarray:
    raw = np.frombuffer(bytes.fromhex(hex_string), dtype=np.uint8)
    bits = np.unpackbits(raw)
    if n_bits > bits.size:
        raise ValueError(f"{hex_string!r} holds fewer than {n_bits} bits")
    return bits[:n_bits]


def format_key(bits: Sequence[int]) -> str:
    return f'bits={len(bits)}\n{key_to_hex(bits)}\n'


def write_key_file(path: str, bits: Sequence[int]):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_key(bits))


def read_key_file(path: str) -> np.ndarray:
    with open(path, 'r', encoding='utf-8') as f:
        header = f.readline().strip()
        hex_string = f.readline().strip()
    if not header.startswith('bits='):
        raise ValueError(f"{path}: missing 'bits=' header")
    return hex_to_key(hex_string, int(header[len('bits='):]))
