"""Seeded random rational data shared by every randomized operation."""

import random
from fractions import Fraction

RANDOM_BOUND = 97


class RationalSampler:
    """
    Deterministic source of random rationals.

    Each randomized operation builds its own sampler from its ``seed``
    argument, so results only depend on (input, seed).
    """

    def __init__(self, seed=0, bound=RANDOM_BOUND):
        self.seed = seed
        self.bound = bound
        self._rng = random.Random(seed)

    def rational(self, nonzero=False):
        while True:
            value = Fraction(self._rng.randint(-self.bound, self.bound),
                             self._rng.randint(1, self.bound))
            if value or not nonzero:
                return value

    def integer(self, nonzero=False):
        while True:
            value = self._rng.randint(-self.bound, self.bound)
            if value or not nonzero:
                return value

    def vector(self, size, nonzero=True):
        while True:
            values = [self.rational() for _ in range(size)]
            if any(values) or not nonzero:
                return values

    def small_vector(self, size, bound=9):
        """Integer vector with small entries, never all zero."""
        while True:
            values = [self._rng.randint(-bound, bound) for _ in range(size)]
            if any(values):
                return values

    def invertible_matrix(self, size, bound=9):
        """Random integer matrix with nonzero determinant."""
        from polys.services.linalg import determinant_scalar

        while True:
            matrix = [[self._rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)]
            if determinant_scalar(matrix) != 0:
                return [[Fraction(v) for v in row] for row in matrix]
