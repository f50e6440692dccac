import pytest
from hypothesis import given
from hypothesis import strategies as st

from canonstrip.util.random import SplitMix64


class TestSplitMix64:
    def test_reference_outputs(self):
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_seed_reduced_modulo(self):
        assert SplitMix64(-1).state == (1 << 64) - 1
        assert SplitMix64(1 << 64).next_u64() == SplitMix64(0).next_u64()

    def test_randbelow(self):
        rng = SplitMix64(0)
        assert rng.randbelow(10) == 0xE220A8397B1DCDAF % 10
        with pytest.raises(ValueError):
            rng.randbelow(0)

    @given(st.integers(), st.integers(-50, 50), st.integers(0, 50))
    def test_randint(self, seed, low, width):
        value = SplitMix64(seed).randint(low, low + width)
        assert low <= value <= low + width

    def test_reproducible(self):
        first, second = SplitMix64(7), SplitMix64(7)
        assert [first.randint(-9, 9) for _ in range(20)] == [
            second.randint(-9, 9) for _ in range(20)
        ]
