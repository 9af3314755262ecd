"""Deterministic random source for clustering initialization.

SplitMix64 with the standard finalizer constants. Chosen over the stdlib
Mersenne generator because the whole state is one u64, the update is four
lines that can be re-implemented bit for bit anywhere, and identical seeds
give identical streams on every platform and interpreter. Determinism of
the map bundles rests on this.
"""

import math

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK
        self._spare_normal: float | None = None

    def next_uint64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_double(self) -> float:
        """Uniform in [0, 1) with 53 random mantissa bits."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n). Scales a double; the bias is below
        2**-40 for any n this package ever draws from."""
        if n <= 0:
            raise ValueError(f"randrange needs n >= 1, got {n}")
        return min(int(self.next_double() * n), n - 1)

    def normal(self) -> float:
        """Standard normal via Box-Muller; pairs are generated together and
        the second value cached, so draws come in a fixed order."""
        if self._spare_normal is not None:
            value, self._spare_normal = self._spare_normal, None
            return value
        u1 = 1.0 - self.next_double()  # (0, 1], keeps log() finite
        u2 = self.next_double()
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        self._spare_normal = radius * math.sin(angle)
        return radius * math.cos(angle)
