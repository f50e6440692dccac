"""Provide the SplitMix64 pseudorandom generator used by randomized suites.

The generator is specified bit for bit so that a seed reproduces the same case on every
platform. See ``docs/getting_started/seeds.rst`` for the algorithm.

"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """A 64-bit SplitMix generator.

    .. code-block:: python

        rng = SplitMix64(7)
        rng.next_u64()  # 64-bit unsigned integer
        rng.randbelow(10)  # integer in [0, 10)

    """

    def __init__(self, seed: int):
        """Initialize a :class:`.SplitMix64` instance.

        :param seed: Any integer; it is reduced modulo 2**64.

        """
        self.state = seed & MASK64

    def next_u64(self) -> int:
        """Advance the state and return the next 64-bit output."""
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Return an integer in ``[0, bound)``.

        The output is ``next_u64() % bound``; the modulo bias is below ``2**-50`` for
        the small bounds the suites use.

        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def randint(self, low: int, high: int) -> int:
        """Return an integer in the closed range ``[low, high]``."""
        return low + self.randbelow(high - low + 1)
