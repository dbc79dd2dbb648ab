"""Seedable, splittable random streams.

Stream derivation rule: stream (i_1, ..., i_k) of master seed s is the
Philox 4x64 generator keyed by SeedSequence(entropy=s, spawn_key=(i_1,
..., i_k)).  Streams with distinct indices are statistically independent
by construction, so batches parallelize across workers without sharing
state and results do not depend on the worker count.
"""

import numpy as np


def stream(master_seed: int, *indices: int) -> np.random.Generator:
    """Independent generator for the given stream indices."""
    ss = np.random.SeedSequence(entropy=int(master_seed), spawn_key=tuple(int(i) for i in indices))
    return np.random.Generator(np.random.Philox(ss))
