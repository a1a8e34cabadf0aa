# -*- coding: utf-8 -*-
import itertools
import os
from typing import Dict

import numpy as np

# Child streams spawned from the session seed, in spawn order.
STREAM_NAMES = ('rounds', 'disclosure', 'hash')


def check_path(path, exist_ok=False, log=print):
    """Check if `path` exists, makedirs if not else warning/IOError."""
    if os.path.exists(path):
        if exist_ok:
            log(f"path {path} exists, may overwrite...")
        else:
            raise IOError(f"path {path} exists, stop.")
    else:
        dirname = os.path.dirname(path)
        if dirname:
            os.makedirs(dirname, exist_ok=True)


def session_streams(seed: int) -> Dict[str, np.random.Generator]:
    """Independent generators for the random decisions of one session.

    The same seed always yields the same three streams, whatever else the
    caller draws from any one of them.
    """
    children = np.random.SeedSequence(seed).spawn(len(STREAM_NAMES))
    return {name: np.random.default_rng(child) for name, child in zip(STREAM_NAMES, children)}


def product_dict(**kwargs):
    keys = kwargs.keys()
    vals = kwargs.values()
    for instance in itertools.product(*vals):
        yield dict(zip(keys, instance))
