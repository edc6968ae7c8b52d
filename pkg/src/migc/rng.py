"""Deterministic, stream-addressable random number generation.

Every randomized component derives its generator from a master seed plus
integer stream coordinates, so serial and parallel runs of the same
configuration draw identical numbers.
"""

from __future__ import annotations

import numpy as np


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    """Independent generator for the given (seed, stream...) coordinates."""
    return np.random.default_rng(
        np.random.SeedSequence((int(seed), *(int(s) for s in stream)))
    )
