MASK64 = (1 << 64) - 1


class Lcg64:
    """
    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64, outputs taken from the high 32
    bits. Bit-reproducible wherever 64-bit modular arithmetic is.
    """
    A = 6364136223846793005
    C = 1442695040888963407

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.A * self.state + self.C) & MASK64
        return self.state

    def next_u32(self) -> int:
        return self.next_u64() >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] by reduction modulo the range."""
        if hi < lo:
            raise ValueError(f"Empty range [{lo}, {hi}]")
        return lo + self.next_u32() % (hi - lo + 1)
