"""p-adic valuations, Garnir content, and exact coefficient fields."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Sequence


@total_ordering
class _NegInf:
    """The value of ell_p(0); compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "NEG_INF"


NEG_INF = _NegInf()


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % f for f in range(2, math.isqrt(p) + 1))


def nu_p(p: int, n: int) -> int:
    if n <= 0:
        raise ValueError("nu_p needs a positive integer")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ell_p(p: int, n: int):
    """Smallest i with p**i > n; NEG_INF for n = 0."""
    if n < 0:
        raise ValueError("ell_p needs a non-negative integer")
    if n == 0:
        return NEG_INF
    i = 0
    while p**i <= n:
        i += 1
    return i


def _check_decreasing(a: Sequence[int]):
    if any(x < 1 for x in a):
        raise ValueError(f"entries must be positive: {tuple(a)}")
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"sequence must be weakly decreasing: {tuple(a)}")


def garnir_content(a: Sequence[int]) -> int:
    """gcd of C(a_i, k) for 1 <= k <= a_{i+1} - 1; 0 when there are none."""
    _check_decreasing(a)
    g = 0
    for i in range(len(a) - 1):
        for k in range(1, a[i + 1]):
            g = math.gcd(g, math.comb(a[i], k))
    return g


def p_divides_gc(p: int, a: Sequence[int]) -> bool:
    _check_decreasing(a)
    return all(nu_p(p, a[i]) >= ell_p(p, a[i + 1] - 1) for i in range(len(a) - 1))


# ---------------------------------------------------------------------------
# coefficient fields


class Field:
    """Exact prime field or the rationals.

    Elements are plain ``int`` in ``[0, p)`` for characteristic ``p`` and
    ``Fraction`` for characteristic 0.
    """

    def __init__(self, characteristic: int):
        if characteristic != 0 and not is_prime(characteristic):
            raise ValueError(f"field characteristic must be 0 or a prime, got {characteristic}")
        self.characteristic = characteristic

    def __repr__(self):
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator % p) * pow(x.denominator % p, -1, p) % p
        return int(x) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_zero(self, x) -> bool:
        return x == 0

    def add(self, x, y):
        s = x + y
        return s % self.characteristic if self.characteristic else s

    def sub(self, x, y):
        s = x - y
        return s % self.characteristic if self.characteristic else s

    def mul(self, x, y):
        s = x * y
        return s % self.characteristic if self.characteristic else s

    def neg(self, x):
        return (-x) % self.characteristic if self.characteristic else -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(x, -1, self.characteristic)
        return 1 / Fraction(x)

    def integer_vanishes(self, n: int) -> bool:
        """Whether the integer ``n`` maps to zero."""
        return n == 0 if self.characteristic == 0 else n % self.characteristic == 0

    def to_str(self, x) -> str:
        return str(x)

    def from_str(self, s: str):
        return self(Fraction(s))


Q = Field(0)
