"""Seeded random rationals.

The generator is :class:`random.Random` (MT19937) seeded with the integer
seed. A draw takes a numerator uniform in [-9, 9] without 0 and a
denominator uniform in [1, 9], in that order, each via ``randint``.
Rejection-resampling enforces the caller's preconditions, so a seed fully
determines every draw.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Sequence

NUM_RANGE = 9
DEN_RANGE = 9


class RationalSampler:
    """Small random rationals from a seeded Mersenne Twister."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self._rng = random.Random(seed)

    def rational(self, *, positive: bool = False, exclude: Sequence = ()) -> Fraction:
        excluded = {Fraction(e) for e in exclude}
        while True:
            num = 0
            while num == 0:
                num = self._rng.randint(-NUM_RANGE, NUM_RANGE)
            den = self._rng.randint(1, DEN_RANGE)
            q = Fraction(num, den)
            if positive and q < 0:
                q = -q
            if q not in excluded:
                return q

    def rationals(self, count: int, *, distinct_squares: bool = False,
                  positive: bool = False, exclude: Sequence = ()) -> list[Fraction]:
        """``count`` nonzero rationals; optionally with pairwise distinct squares."""
        out: list[Fraction] = []
        squares: set[Fraction] = set()
        while len(out) < count:
            q = self.rational(positive=positive, exclude=exclude)
            if distinct_squares:
                if q * q in squares:
                    continue
                squares.add(q * q)
            out.append(q)
        return out

    def rational_where(self, predicate: Callable[[Fraction], bool], **kw) -> Fraction:
        while True:
            q = self.rational(**kw)
            if predicate(q):
                return q

    def integer(self, low: int, high: int) -> int:
        return self._rng.randint(low, high)

    def choice(self, seq):
        return self._rng.choice(seq)
