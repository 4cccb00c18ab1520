"""SplitMix64: a tiny, fully specified 64-bit generator.

Chosen over :mod:`random` because its output is defined bit-for-bit by the
recurrence below, so a given seed reproduces the same stream on every
platform and Python version.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def bernoulli(self, p: Fraction) -> bool:
        """True with probability exactly ``p`` (resolution 2**-64)."""
        # u / 2**64 < p  <=>  u * den < num * 2**64
        return self.next_u64() * p.denominator < p.numerator << 64

    def below(self, bound: int) -> int:
        """Uniform-ish integer in ``[0, bound)``; modulo bias is negligible here."""
        return self.next_u64() % bound


def as_probability(p) -> Fraction:
    q = Fraction(p) if not isinstance(p, str) else Fraction(p.strip())
    if not 0 <= q <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p!r}")
    return q
