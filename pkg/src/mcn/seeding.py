"""Deterministic random streams keyed by integers or integer tuples."""

from __future__ import annotations

import numpy as np


def derive_rng(key: int | tuple[int, ...]) -> np.random.Generator:
    """Generator whose stream depends only on the integer key.

    Tuples let callers derive independent per-task streams, e.g.
    ``derive_rng((seed, point, trial))``, without coordinating offsets.
    """
    if isinstance(key, int):
        key = (key,)
    return np.random.default_rng(np.random.SeedSequence(key))
