"""Deterministic sub-seed derivation.

Every component that needs several independent random streams (trees of a
forest, repeated stability runs, per-record synthesis) derives them with
``mix(seed, stream)`` so any implementation of the same arithmetic can
reproduce the streams exactly. The mixer is SplitMix64 applied to
``seed + (stream + 1) * GOLDEN`` with all arithmetic modulo 2**64.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix(seed: int, stream: int) -> int:
    """Derive an independent 64-bit sub-seed for (seed, stream)."""
    z = (seed + (stream + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def rng_for(seed: int, stream: int) -> np.random.Generator:
    """A fresh generator seeded from mix(seed, stream)."""
    return np.random.default_rng(mix(seed, stream))
