"""Deterministic pseudo-random streams for the generator harness.

The generator contract is bit-identical output for identical seeds, across
runs, platforms, and library versions.  That rules out delegating to a
library generator whose stream may change between releases, so the two
classic algorithms are spelled out here:

- SplitMix64 expands a 64-bit seed into generator state (and doubles as the
  seed-derivation hash for suite trials);
- xoshiro256** produces the actual stream.

Gaussian variates come from Box-Muller on the raw 53-bit uniforms.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["MASK64", "splitmix64", "Xoshiro256StarStar"]

MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns ``(next_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256StarStar:
    """xoshiro256** stream seeded through SplitMix64.

    Accepts any seed in ``[0, 2**64)``.  All derived draws (uniforms,
    normals, integers) consume the stream in a fixed documented order, so a
    seed pins every downstream matrix bit-for-bit.
    """

    def __init__(self, seed: int):
        seed = int(seed)
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        state = seed
        s = []
        for _ in range(4):
            state, value = splitmix64(state)
            s.append(value)
        self._s = s

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def uint64_array(self, n: int) -> np.ndarray:
        """The next ``n`` raw 64-bit words."""
        s0, s1, s2, s3 = self._s
        out = np.empty(n, dtype=np.uint64)
        for i in range(n):
            result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
            t = (s1 << 17) & MASK64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = _rotl(s3, 45)
            out[i] = result
        self._s = [s0, s1, s2, s3]
        return out

    def uniforms(self, n: int) -> np.ndarray:
        """``n`` doubles uniform on [0, 1), from the top 53 bits of each word."""
        raw = self.uint64_array(n)
        return (raw >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def uniform_int(self, lo: int, hi: int) -> int:
        """One integer uniform on the inclusive range [lo, hi]."""
        if lo > hi:
            raise ValueError(f"empty integer range [{lo}, {hi}]")
        span = hi - lo + 1
        return lo + self.next_uint64() % span

    def normals(self, n: int) -> np.ndarray:
        """``n`` standard normal doubles via Box-Muller."""
        pairs = (n + 1) // 2
        raw = self.uint64_array(2 * pairs)
        # u1 lands in (0, 1] so the logarithm is always finite.
        u1 = ((raw[0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53
        u2 = (raw[1::2] >> np.uint64(11)).astype(np.float64) * 2.0**-53
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = 2.0 * math.pi * u2
        out = np.empty(2 * pairs, dtype=np.float64)
        out[0::2] = radius * np.cos(angle)
        out[1::2] = radius * np.sin(angle)
        return out[:n]

    def complex_normals(self, shape: tuple[int, ...]) -> np.ndarray:
        """Standard complex Gaussian array: independent N(0,1) real and imaginary parts."""
        count = int(np.prod(shape))
        re = self.normals(count)
        im = self.normals(count)
        return (re + 1j * im).reshape(shape)
