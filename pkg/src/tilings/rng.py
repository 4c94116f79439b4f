"""Seedable 64-bit mixing generator (splitmix64) with exact big-integer draws.

The mixing constants pin the generator down completely, so a seed produces
the same stream on every platform and Python version.  Weighted and
ranged draws use rejection sampling over whole 64-bit words, which keeps them
exactly uniform even for arbitrary-precision bounds.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 finalizer: a bijective 64-bit mixing function."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic stream of 64-bit words from a seed."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_word(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def bits(self, k: int) -> int:
        """An unsigned integer with k uniform random bits."""
        out = 0
        n = 0
        while n < k:
            out = (out << 64) | self.next_word()
            n += 64
        return out >> (n - k)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n); n may be arbitrarily large."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        k = n.bit_length()
        while True:
            v = self.bits(k)
            if v < n:
                return v

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return self.bits(53) * 2.0 ** -53

    def coin(self) -> int:
        return self.bits(1)


def stream(seed: int, index: int = 0) -> SplitMix64:
    """An independent generator for (seed, index); used so concurrent samples
    never share state."""
    return SplitMix64(mix64(seed) ^ mix64((index + 1) * _GAMMA))
