"""Deterministic splitmix64 stream.

Used for perturbation coefficients and random Newton seeds so that runs are
reproducible bit-for-bit across platforms (pure integer arithmetic, no
dependence on NumPy's generator internals).
"""

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64 PRNG (Steele et al.); tiny state, good enough for seeding."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        """Uniform double in [lo, hi) with 53 random bits."""
        u = (self.next_u64() >> 11) * (1.0 / (1 << 53))
        return lo + (hi - lo) * u
