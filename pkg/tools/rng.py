"""
seeded generator, bit reproducible across implementations

64-bit multiplicative congruential generator:
    state <- state * 0xF1357AEA2E62A9C5 mod 2^64
the state is seeded with the splitmix64 finalizer of the seed, forced odd,
a uniform draw in [0, 1) is (state >> 11) * 2^-53
"""
import numpy as np

MASK64 = (1 << 64) - 1
MULTIPLIER = 0xF1357AEA2E62A9C5
SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
SPLITMIX_MUL2 = 0x94D049BB133111EB


def splitmix64(seed):
    z = (seed + SPLITMIX_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * SPLITMIX_MUL1) & MASK64
    z = ((z ^ (z >> 27)) * SPLITMIX_MUL2) & MASK64
    return z ^ (z >> 31)


class Mcg64:
    def __init__(self, seed):
        self._seed = seed
        self.state = splitmix64(seed & MASK64) | 1

    @property
    def seed(self):
        return self._seed

    def next(self):
        self.state = (self.state * MULTIPLIER) & MASK64
        return self.state

    def random(self):
        return (self.next() >> 11) * 2.0**-53

    def randoms(self, n):
        return np.array([self.random() for _ in range(n)])

    def choices(self, probabilities, n):
        """n indices drawn by inverse cdf over probabilities"""
        cdf = np.cumsum(np.clip(probabilities, 0.0, None))
        cdf /= cdf[-1]
        indices = np.searchsorted(cdf, self.randoms(n), side="right")
        return np.minimum(indices, len(cdf) - 1)
