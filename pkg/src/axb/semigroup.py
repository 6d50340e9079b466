"""The group Q x| Q*+ and the semigroup N x| Nx, with the left-invariant order.

Group law: (r, a)(q, b) = (r + aq, ab), inverse (r, a)^-1 = (-r/a, 1/a).
The order x <= y holds iff x^-1 y lies in the positive cone N x| Nx, and any
two semigroup elements with a common upper bound have a least one, computed
by a Chinese-remainder calculation.

Pure functions over immutable values; thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from axb.arithmetic import crt


@dataclass(frozen=True)
class GroupElement:
    """(r, a) in Q x| Q*+ with a > 0; rationals are kept in lowest terms."""

    r: Fraction
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "a", Fraction(self.a))
        if self.a <= 0:
            raise ValueError(f"multiplicative part must be positive, got {self.a}")

    @classmethod
    def identity(cls) -> GroupElement:
        return cls(Fraction(0), Fraction(1))

    def __mul__(self, other) -> GroupElement:
        other = as_group(other)
        return GroupElement(self.r + self.a * other.r, self.a * other.a)

    def inverse(self) -> GroupElement:
        return GroupElement(-self.r / self.a, 1 / self.a)

    def in_positive_cone(self) -> bool:
        """True iff the element lies in N x| Nx."""
        return (
            self.r.denominator == 1
            and self.r >= 0
            and self.a.denominator == 1
            and self.a >= 1
        )

    def to_semigroup(self) -> SemigroupElement:
        if not self.in_positive_cone():
            raise ValueError(f"{self} is not in the positive cone")
        return SemigroupElement(int(self.r), int(self.a))

    def __str__(self):
        return f"({self.r},{self.a})"


@dataclass(frozen=True)
class SemigroupElement:
    """(m, a) in N x| Nx: m >= 0 and a >= 1."""

    m: int
    a: int

    def __post_init__(self):
        if self.m < 0 or self.a < 1:
            raise ValueError(f"({self.m},{self.a}) is not in N x| Nx")

    @classmethod
    def identity(cls) -> SemigroupElement:
        return cls(0, 1)

    def __mul__(self, other) -> SemigroupElement:
        return SemigroupElement(self.m + self.a * other.m, self.a * other.a)

    def to_group(self) -> GroupElement:
        return GroupElement(Fraction(self.m), Fraction(self.a))

    def __str__(self):
        return f"({self.m},{self.a})"


def as_group(x) -> GroupElement:
    return x.to_group() if isinstance(x, SemigroupElement) else x


def leq(x, y) -> bool:
    """The left-invariant order: x <= y iff x^-1 y is in N x| Nx."""
    if isinstance(x, SemigroupElement) and isinstance(y, SemigroupElement):
        dm = y.m - x.m
        return dm >= 0 and dm % x.a == 0 and y.a % x.a == 0
    return (as_group(x).inverse() * as_group(y)).in_positive_cone()


def left_quotient(x: SemigroupElement, y: SemigroupElement) -> SemigroupElement:
    """x^-1 y for x <= y, as a semigroup element."""
    dm = y.m - x.m
    if dm < 0 or dm % x.a or y.a % x.a:
        raise ValueError(f"{x} is not below {y}")
    return SemigroupElement(dm // x.a, y.a // x.a)


def lub(x: SemigroupElement, y: SemigroupElement) -> SemigroupElement | None:
    """Least upper bound of x and y in N x| Nx, or None when there is none.

    For x = (m, a) and y = (n, b) a common upper bound exists iff
    m = n (mod gcd(a, b)); the least one is (l, lcm(a, b)) where l is the
    smallest solution of l = m (mod a), l = n (mod b) with l >= max(m, n).
    """
    g = math.gcd(x.a, y.a)
    if (x.m - y.m) % g:
        return None
    sol = crt([(x.m % x.a, x.a), (y.m % y.a, y.a)])
    assert sol is not None
    l, period = sol
    lo = max(x.m, y.m)
    if l < lo:
        l += (lo - l + period - 1) // period * period
    return SemigroupElement(l, x.a // g * y.a)
