"""Points of the Nica spectrum of N x| Nx and the partial action on them.

A point is a nonempty hereditary directed subset of the semigroup; the two
parametrised families are

    PointA(m, N) = {(k, a) : a | N and (m - k)/a in N}
    PointB(r, N) = {(k, a) : a | N and k = r(a) mod a}

with N supernatural and r a residue modulo N.  The enveloping group acts
partially by g . w = Her((g w) ∩ P); closed forms are available for B-points
and for A-points with modulus nabla, and a windowed brute-force closure with
candidate identification covers the remaining A-points.

Points are immutable; all operations are pure and safe for concurrent use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from axb.arithmetic import (
    NABLA,
    IntegerResidue,
    ProfiniteResidue,
    Supernatural,
    divisors_up_to,
    int_divides,
)
from axb.semigroup import GroupElement, SemigroupElement, leq, lub


@dataclass(frozen=True)
class Window:
    """Bounds for windowed sweeps over semigroup elements (k <= k_max, a <= a_max)."""

    k_max: int = 200
    a_max: int = 60

    def elements(self):
        for a in range(1, self.a_max + 1):
            for k in range(self.k_max + 1):
                yield SemigroupElement(k, a)

    def __str__(self):
        return f"k<={self.k_max},a<={self.a_max}"


DEFAULT_WINDOW = Window()


class BoundaryClass(Enum):
    INTERIOR = "interior"
    ADDITIVE = "additive"
    MULTIPLICATIVE = "multiplicative"
    MINIMAL = "minimal"


@dataclass(frozen=True)
class PointA:
    """A(m, N): the elements (k, a) with a | N and (m - k) a nonnegative multiple of a."""

    m: int
    N: Supernatural

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("offset must be a nonnegative integer")
        object.__setattr__(self, "N", Supernatural.coerce(self.N))

    def __str__(self):
        return f"A({self.m};{self.N})"


@dataclass(frozen=True)
class PointB:
    """B(r, N): the elements (k, a) with a | N and k congruent to r(a) mod a."""

    r: ProfiniteResidue
    N: Supernatural

    def __post_init__(self):
        object.__setattr__(self, "N", Supernatural.coerce(self.N))
        if self.r.modulus != self.N:
            raise ValueError(f"residue modulus {self.r.modulus} differs from point modulus {self.N}")

    def __str__(self):
        return f"B({self.r!r};{self.N})"


OmegaPoint = PointA | PointB


@dataclass(frozen=True)
class Undefined:
    """Returned by partial_act when the point is (or may be) outside the domain.

    ``certain`` is True when emptiness of (g w) ∩ P is provable from the
    modulus arithmetic, and False when it only reflects an exhausted search
    window (a semi-decision); the window used is then reported.
    """

    reason: str
    certain: bool
    window: Window | None = None


class IdentificationError(Exception):
    """Brute-force closure did not match any candidate point on the window."""


def contains(point: OmegaPoint, x: SemigroupElement) -> bool:
    """Membership of x = (k, a) in the hereditary directed set the point denotes."""
    k, a = x.m, x.a
    if not int_divides(a, point.N):
        return False
    if isinstance(point, PointA):
        d = point.m - k
        return d >= 0 and d % a == 0
    return k % a == point.r.query(a)


def evaluate(point: OmegaPoint, x: SemigroupElement) -> int:
    """The characteristic function 1_x evaluated at the point."""
    return 1 if contains(point, x) else 0


def boundary_class(point: OmegaPoint) -> BoundaryClass:
    if isinstance(point, PointB):
        return BoundaryClass.MINIMAL if point.N.is_nabla else BoundaryClass.ADDITIVE
    return BoundaryClass.MULTIPLICATIVE if point.N.is_nabla else BoundaryClass.INTERIOR


def point_elements(point: OmegaPoint, window: Window):
    """The members of the point inside the window, ascending in (a, k).

    Divisors at which a partially specified residue is undetermined are
    skipped: enumeration yields exactly the certifiable members.
    """
    from axb.arithmetic import UndeterminedResidue

    for a in divisors_up_to(point.N, window.a_max):
        if isinstance(point, PointA):
            k = point.m % a
            hi = min(point.m, window.k_max)
        else:
            try:
                k = point.r.query(a)
            except UndeterminedResidue:
                continue
            hi = window.k_max
        while k <= hi:
            yield SemigroupElement(k, a)
            k += a


def points_agree_on_window(p1: OmegaPoint, p2: OmegaPoint, window: Window) -> bool:
    """Equality of the two membership functions on all window elements."""
    return all(contains(p1, x) == contains(p2, x) for x in window.elements())


class TransformedResidue(ProfiniteResidue):
    """The residue w + y*r modulo y*N, queried through the base residue r.

    For a finite divisor a' of the new modulus, the value is
    (w + y * r(v*a'/gcd(a', u))) mod a' where y = u/v in lowest terms; the
    combination is an integer whenever the transformed point is nonempty.
    """

    __slots__ = ("base", "w", "y")

    def __init__(self, base: ProfiniteResidue, w: Fraction, y: Fraction, modulus):
        super().__init__(modulus)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "w", Fraction(w))
        object.__setattr__(self, "y", Fraction(y))

    def _query(self, a: int) -> int:
        u, v = self.y.numerator, self.y.denominator
        src = v * a // gcd(a, u)
        val = self.w + self.y * self.base.query(src)
        if val.denominator != 1:
            raise ValueError("transformed residue is not integral; point was empty")
        return int(val) % a

    def __repr__(self):
        return f"TransformedResidue({self.base!r}, w={self.w}, y={self.y}, mod {self.modulus})"


def _transform_residue(r: ProfiniteResidue, w: Fraction, y: Fraction, new_modulus: Supernatural) -> ProfiniteResidue:
    if isinstance(r, IntegerResidue):
        val = w + y * r.value
        if val.denominator == 1:
            return IntegerResidue(int(val), new_modulus)
    if new_modulus.is_finite:
        n = new_modulus.to_int()
        probe = TransformedResidue(r, w, y, new_modulus)
        return IntegerResidue(probe.query(n), new_modulus)
    return TransformedResidue(r, w, y, new_modulus)


def _find_witness(g: GroupElement, point: OmegaPoint, window: Window) -> SemigroupElement | None:
    """Some (k, a) in the point (within the window) with g(k, a) in the cone."""
    for x in point_elements(point, window):
        if (g * x.to_group()).in_positive_cone():
            return x
    return None


def partial_act(
    g: GroupElement, point: OmegaPoint, window: Window = DEFAULT_WINDOW
) -> OmegaPoint | Undefined:
    """The partial action g . point = Her((g point) ∩ P).

    Closed forms: B(r, N) maps to B(w + ry, yN) and A(m, nabla) to
    A(w + ym, nabla).  Nonemptiness of the intersection is witnessed by a
    window search (a semi-decision, reported via Undefined.certain=False);
    A-points with other moduli go through a windowed brute-force closure and
    are identified against the candidate A(w + ym, yN), raising
    IdentificationError on mismatch.
    """
    w, y = g.r, g.a
    if w == 0 and y == 1:
        return point

    if isinstance(point, PointB):
        new_n = point.N.scale(y)
        if new_n is None:
            return Undefined("no multiplicative part of the image lies in Nx", certain=True)
        witness = _find_witness(g, point, window)
        if witness is None:
            return Undefined("no window element maps into the semigroup", certain=False, window=window)
        return PointB(_transform_residue(point.r, w, y, new_n), new_n)

    witness = _find_witness(g, point, window)
    if witness is None:
        certain = point.N.scale(y) is None
        reason = (
            "no multiplicative part of the image lies in Nx"
            if certain
            else "no window element maps into the semigroup"
        )
        return Undefined(reason, certain=certain, window=None if certain else window)

    new_m = w + y * point.m
    assert new_m.denominator == 1 and new_m >= 0  # guaranteed once a witness exists
    if point.N.is_nabla:
        return PointA(int(new_m), NABLA)

    new_n = point.N.scale(y)
    assert new_n is not None  # witness forces the denominator of y into N
    candidate = PointA(int(new_m), new_n)
    mismatch = closure_mismatch(g, point, candidate, src_window=window)
    if mismatch is not None:
        raise IdentificationError(
            f"brute-force closure of {g}.{point} disagrees with {candidate} at {mismatch} "
            f"(source window {window})"
        )
    return candidate


def closure_image(g: GroupElement, point: OmegaPoint, window: Window) -> list[SemigroupElement]:
    """The images g(k, a) in the cone, for the point's window elements."""
    out = []
    for x in point_elements(point, window):
        h = g * x.to_group()
        if h.in_positive_cone():
            out.append(h.to_semigroup())
    return out


def closure_contains(
    g: GroupElement, point: OmegaPoint, x: SemigroupElement, window: Window
) -> bool:
    """Certified membership of x in Her((g point) ∩ P), searched in the window."""
    for y in point_elements(point, window):
        h = g * y.to_group()
        if h.in_positive_cone() and leq(x, h.to_semigroup()):
            return True
    return False


def closure_mismatch(
    g: GroupElement,
    point: OmegaPoint,
    candidate: OmegaPoint,
    src_window: Window = DEFAULT_WINDOW,
    cmp_window: Window | None = None,
):
    """First comparison element where the brute-force closure and candidate differ.

    Membership in the closure is certified by an explicit witness; a miss in
    the primary window is retried in a deeper window before being reported,
    so a non-None result is a genuine disagreement on the searched windows.
    Returns None when closure and candidate agree on the comparison window.
    """
    if cmp_window is None:
        cmp_window = Window(min(40, src_window.k_max // 4), min(12, src_window.a_max // 2))
    deeper = Window(4 * src_window.k_max, 2 * src_window.a_max)
    covered = {}
    for s in closure_image(g, point, src_window):
        covered.setdefault(s.a, []).append(s.m)
    for x in cmp_window.elements():
        claimed = contains(candidate, x)
        found = any(
            m >= x.m and (m - x.m) % x.a == 0
            for a, ms in covered.items()
            if a % x.a == 0
            for m in ms
        )
        if found != claimed:
            if not found and closure_contains(g, point, x, deeper):
                continue
            return x, found, claimed
    return None


def boundary_relation_check(
    point: OmegaPoint, which: str, window: Window, prime_bound: int = 13
):
    """Window check of the defining relation of the additive or multiplicative boundary.

    ``which`` is "add" (every member (k, a) has (k + a, a) in the point) or
    "mult" (every member (j, a) and prime p <= prime_bound admit k < p with
    (j + ak, ap) in the point).  Returns (True, None) or (False, witness).
    """
    from axb.arithmetic import primes_up_to

    if which == "add":
        for x in point_elements(point, window):
            if not contains(point, SemigroupElement(x.m + x.a, x.a)):
                return False, x
        return True, None
    if which == "mult":
        primes = primes_up_to(prime_bound)
        for x in point_elements(point, window):
            for p in primes:
                if violates_multiplicative(point, x, p):
                    return False, (x, p)
        return True, None
    raise ValueError(f"unknown boundary relation {which!r}")


def violates_multiplicative(point: OmegaPoint, x: SemigroupElement, p: int) -> bool:
    """True when no k < p puts (x.m + x.a * k, x.a * p) in the point."""
    return not any(
        contains(point, SemigroupElement(x.m + x.a * k, x.a * p)) for k in range(p)
    )


@dataclass(frozen=True)
class VSet:
    """Basic open set: contains base and excludes base*h for every h in the finite set."""

    base: SemigroupElement
    excluded: tuple[SemigroupElement, ...]

    def __post_init__(self):
        if any(h == SemigroupElement.identity() for h in self.excluded):
            raise ValueError("the excluded set may not contain the identity")


@dataclass(frozen=True)
class WSet:
    """Open set: contains base = (k, a) and excludes (k + a*l, a*p) for p in primes, l < p."""

    base: SemigroupElement
    primes: tuple[int, ...]


def in_open_set(point: OmegaPoint, region: VSet | WSet) -> bool:
    if not contains(point, region.base):
        return False
    if isinstance(region, VSet):
        return all(not contains(point, region.base * h) for h in region.excluded)
    k, a = region.base.m, region.base.a
    return all(
        not contains(point, SemigroupElement(k + a * l, a * p))
        for p in region.primes
        for l in range(p)
    )


def converges(
    seq: list[OmegaPoint], limit: OmegaPoint, gens: list[SemigroupElement]
) -> bool:
    """Eventual agreement with the limit on every generator, within the given tail.

    For each generator x the values evaluate(seq[n], 1_x) must stabilise at
    evaluate(limit, 1_x) before the end of the supplied sequence.
    """
    if not seq:
        return False
    for x in gens:
        target = evaluate(limit, x)
        values = [evaluate(p, x) for p in seq]
        tail = len(values)
        while tail > 0 and values[tail - 1] == target:
            tail -= 1
        if tail == len(values):
            return False
    return True


def default_generators(bound: int = 30) -> list[SemigroupElement]:
    """The CLI's default generator list {(k, a) : k, a <= bound}."""
    return [
        SemigroupElement(k, a)
        for a in range(1, bound + 1)
        for k in range(bound + 1)
    ]


def is_hereditary_directed_on(point: OmegaPoint, window: Window) -> bool:
    """Hereditary and directed, checked exhaustively on the window."""
    members = [x for x in window.elements() if contains(point, x)]
    for x in members:
        for y in window.elements():
            if leq(y, x) and not contains(point, y):
                return False
    for x, y in itertools.combinations(members, 2):
        z = lub(x, y)
        if z is None or not contains(point, z):
            return False
    return True
