"""Seeded xoshiro256** generator.

A self-contained, named 64-bit PRNG so that generated probability vectors
reproduce bit-identically from a seed, independent of the host library
version.  Seeding expands a single 64-bit seed through splitmix64, the
standard companion initializer.
"""

from __future__ import annotations

import numpy as np

__all__ = ["Xoshiro256StarStar", "splitmix64_stream", "derive_seed"]

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


def splitmix64_stream(seed: int):
    """Infinite splitmix64 stream used for state expansion and seed derivation."""
    state = seed & _MASK
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield z ^ (z >> 31)


def derive_seed(seed: int, *tokens: object) -> int:
    """Deterministically derive a sub-seed from a base seed and hashable tokens.

    Used by sweeps so every cell gets an independent stream while the whole
    experiment stays reproducible from one seed.
    """
    h = seed & _MASK
    sm = splitmix64_stream(h)
    for token in tokens:
        for byte in repr(token).encode():
            h = (h ^ byte) ^ next(sm)
            h = (h * 0x100000001B3) & _MASK
    return h


class Xoshiro256StarStar:
    """xoshiro256** by Blackman and Vigna (2018)."""

    def __init__(self, seed: int):
        sm = splitmix64_stream(seed)
        self._s = [next(sm) for _ in range(4)]

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK, 7) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randoms(self, n: int) -> np.ndarray:
        return np.array([self.random() for _ in range(n)], dtype=float)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive (rejection-free modulo bias is
        negligible for the small ranges used here)."""
        return lo + self.next_u64() % (hi - lo + 1)
