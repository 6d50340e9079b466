"""Exact arithmetic for supernatural numbers and coherent residue families.

A supernatural number is a formal product prod_p p^(e_p) with exponents in
N ∪ {inf}.  We represent exactly those whose exponent map is eventually
constant (finitely many exceptions to one default value), which covers every
finite natural, every p^inf, and the full product ``nabla`` with all
exponents infinite, while keeping equality and divisibility decidable.

A residue modulo a supernatural number N is a coherent family of ordinary
residues r(a) in Z/a, one for each finite divisor a of N, with
r(b) = r(a) mod a whenever a | b.  Two concrete constructors are provided:
the embedding of an integer, and a finite coherent table (total exactly when
the modulus is finite).

All values are immutable after construction and safe for concurrent reads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

INF = float("inf")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    """All primes p <= bound, ascending."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, bound + 1) if sieve[p]]


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of n >= 1 as ((p, e), ...) with ascending p."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def crt(congruences: list[tuple[int, int]]) -> tuple[int, int] | None:
    """Solve x = r_i (mod m_i) simultaneously.

    Returns (x, M) with 0 <= x < M = lcm(m_i), or None when the system is
    inconsistent.  Moduli need not be coprime.
    """
    x, mod = 0, 1
    for r, m in congruences:
        g = math.gcd(mod, m)
        if (r - x) % g:
            return None
        lcm = mod // g * m
        t = ((r - x) // g * pow(mod // g, -1, m // g)) % (m // g) if m // g > 1 else 0
        x = (x + mod * t) % lcm
        mod = lcm
    return x, mod


def _check_exponent(e) -> None:
    if e is INF:
        return
    if not isinstance(e, int) or e < 0:
        raise ValueError(f"exponent must be a nonnegative integer or INF, got {e!r}")


class Supernatural:
    """prod_p p^(e_p) with an eventually constant exponent map.

    ``default`` is the exponent of all but finitely many primes and
    ``exceptions`` maps the remaining primes to their exponents.  A finite
    natural has default 0 and finite exception values; ``nabla`` has default
    INF and no exceptions.
    """

    __slots__ = ("default", "exceptions", "_hash")

    def __init__(self, default=0, exceptions=None):
        _check_exponent(default)
        exc = {}
        for p, e in (exceptions or {}).items():
            if not is_prime(p):
                raise ValueError(f"exception key {p} is not prime")
            _check_exponent(e)
            if e != default:
                exc[p] = e
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "exceptions", dict(sorted(exc.items())))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Supernatural values are immutable")

    @classmethod
    def from_int(cls, n: int) -> Supernatural:
        if n < 1:
            raise ValueError(f"{n} is not a positive natural")
        return cls(0, dict(prime_factors(n)))

    @classmethod
    def nabla(cls) -> Supernatural:
        return cls(INF)

    @classmethod
    def prime_power(cls, p: int, e) -> Supernatural:
        return cls(0, {p: e})

    @classmethod
    def coerce(cls, value) -> Supernatural:
        if isinstance(value, Supernatural):
            return value
        if isinstance(value, int):
            return cls.from_int(value)
        raise TypeError(f"cannot interpret {value!r} as a supernatural number")

    def exponent(self, p: int):
        """e_p: the exponent of the prime p."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return self.exceptions.get(p, self.default)

    @property
    def is_finite(self) -> bool:
        return self.default == 0 and all(e is not INF for e in self.exceptions.values())

    @property
    def is_nabla(self) -> bool:
        return self.default is INF and not self.exceptions

    def to_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not a finite natural")
        n = 1
        for p, e in self.exceptions.items():
            n *= p**e
        return n

    def _primes(self, other: Supernatural):
        return sorted(set(self.exceptions) | set(other.exceptions))

    def divides(self, other: Supernatural) -> bool:
        """True iff e_p(self) <= e_p(other) for every prime p."""
        other = Supernatural.coerce(other)
        if not self.default <= other.default:
            return False
        return all(self.exponent(p) <= other.exponent(p) for p in self._primes(other))

    def lcm(self, other: Supernatural) -> Supernatural:
        other = Supernatural.coerce(other)
        default = max(self.default, other.default)
        exc = {p: max(self.exponent(p), other.exponent(p)) for p in self._primes(other)}
        return Supernatural(default, exc)

    def gcd(self, other: Supernatural) -> Supernatural:
        other = Supernatural.coerce(other)
        default = min(self.default, other.default)
        exc = {p: min(self.exponent(p), other.exponent(p)) for p in self._primes(other)}
        return Supernatural(default, exc)

    def scale(self, y: Fraction) -> Supernatural | None:
        """The supernatural y * self for positive rational y, or None.

        None signals that some exponent would go negative, i.e. the product
        is not a supernatural number.
        """
        y = Fraction(y)
        if y <= 0:
            raise ValueError("scale factor must be positive")
        shift = dict(prime_factors(y.numerator))
        for p, e in prime_factors(y.denominator):
            shift[p] = shift.get(p, 0) - e
        exc = dict(self.exceptions)
        for p, d in shift.items():
            e = self.exponent(p)
            new = e if e is INF else e + d
            if new is not INF and new < 0:
                return None
            exc[p] = new
        return Supernatural(self.default, exc)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_finite and self.to_int() == other
        if not isinstance(other, Supernatural):
            return NotImplemented
        return self.default == other.default and self.exceptions == other.exceptions

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.default, tuple(self.exceptions.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if self.is_nabla:
            return "nabla"
        if self.is_finite:
            return str(self.to_int())
        if self.default == 0:
            parts = []
            for p, e in self.exceptions.items():
                if e is INF:
                    parts.append(f"{p}^inf")
                elif e == 1:
                    parts.append(str(p))
                else:
                    parts.append(f"{p}^{e}")
            return "*".join(parts)
        # Default-infinite values with exceptions have no CLI syntax; show structure.
        return repr(self)

    def __repr__(self):
        return f"Supernatural(default={self.default}, exceptions={self.exceptions})"


NABLA = Supernatural.nabla()


@lru_cache(maxsize=None)
def int_divides(a: int, n: Supernatural) -> bool:
    """True iff the finite natural a divides the supernatural n."""
    if a < 1:
        raise ValueError(f"{a} is not a positive natural")
    return all(e <= n.exponent(p) for p, e in prime_factors(a))


def divisors_up_to(n: Supernatural, bound: int) -> list[int]:
    """Finite divisors of n that are <= bound, ascending."""
    return [a for a in range(1, bound + 1) if int_divides(a, n)]


class UndeterminedResidue(ValueError):
    """A table-backed residue was queried outside its determined divisors."""


class ProfiniteResidue:
    """A coherent residue family r with r(a) in Z/a for finite divisors a | modulus.

    Subclasses implement ``_query``.  Queries at non-divisors are rejected;
    table-backed residues with infinite modulus may additionally be
    undetermined at some divisors.
    """

    __slots__ = ("modulus",)

    def __init__(self, modulus: Supernatural):
        object.__setattr__(self, "modulus", Supernatural.coerce(modulus))

    def __setattr__(self, name, value):
        raise AttributeError("residues are immutable")

    @classmethod
    def from_integer(cls, m: int, modulus) -> ProfiniteResidue:
        return IntegerResidue(m, modulus)

    @classmethod
    def from_table(cls, entries: dict[int, int], modulus) -> ProfiniteResidue:
        return TableResidue(entries, modulus)

    def query(self, a: int) -> int:
        """r(a): the residue at the finite divisor a, in [0, a)."""
        if a < 1:
            raise ValueError(f"{a} is not a positive natural")
        if not int_divides(a, self.modulus):
            raise ValueError(f"{a} does not divide the modulus {self.modulus}")
        if a == 1:
            return 0
        return self._query(a)

    residue = query

    def _query(self, a: int) -> int:
        raise NotImplementedError

    def reduce(self, m) -> ProfiniteResidue:
        """The residue with modulus m | modulus agreeing with self on divisors of m."""
        m = Supernatural.coerce(m)
        if not m.divides(self.modulus):
            raise ValueError(f"{m} does not divide the modulus {self.modulus}")
        if m.is_finite:
            return IntegerResidue(self.query(m.to_int()), m)
        return ReducedResidue(self, m)

    def __eq__(self, other):
        if not isinstance(other, ProfiniteResidue):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        if self.modulus.is_finite:
            n = self.modulus.to_int()
            return self.query(n) == other.query(n)
        a, b = _unwrap(self), _unwrap(other)
        if isinstance(a, IntegerResidue) and isinstance(b, IntegerResidue):
            return a.value == b.value
        if isinstance(a, TableResidue) and isinstance(b, TableResidue):
            return a.determined == b.determined and a.query(a.determined) == b.query(b.determined)
        # Distinct backings with infinite modulus: only identity is decidable here.
        return a is b

    def __hash__(self):
        if self.modulus.is_finite:
            n = self.modulus.to_int()
            return hash((self.modulus, self.query(n)))
        return hash(self.modulus)


def _unwrap(r: ProfiniteResidue) -> ProfiniteResidue:
    while isinstance(r, ReducedResidue):
        r = r.parent
    return r


class IntegerResidue(ProfiniteResidue):
    """The image of an integer in Z/modulus; total at every finite divisor."""

    __slots__ = ("value",)

    def __init__(self, value: int, modulus):
        super().__init__(modulus)
        object.__setattr__(self, "value", value)

    def _query(self, a: int) -> int:
        return self.value % a

    def __repr__(self):
        return f"IntegerResidue({self.value}, mod {self.modulus})"


class TableResidue(ProfiniteResidue):
    """A residue given by a finite coherent table {a_i: r_i}.

    Determined exactly at the divisors of lcm(a_i); when the modulus is
    finite the table must determine the residue at the full modulus.
    """

    __slots__ = ("entries", "determined")

    def __init__(self, entries: dict[int, int], modulus):
        super().__init__(modulus)
        if not entries:
            entries = {1: 0}
        det = 1
        for a, r in entries.items():
            if a < 1 or not int_divides(a, self.modulus):
                raise ValueError(f"table key {a} does not divide the modulus")
            if not 0 <= r < a:
                raise ValueError(f"table value {r} out of range [0, {a})")
            det = det * a // math.gcd(det, a)
        for a, r in entries.items():
            for b, s in entries.items():
                g = math.gcd(a, b)
                if r % g != s % g:
                    raise ValueError(f"incoherent table: {r} mod {a} vs {s} mod {b}")
        if self.modulus.is_finite and det % self.modulus.to_int() != 0:
            raise ValueError("table does not determine the residue at the finite modulus")
        object.__setattr__(self, "entries", dict(sorted(entries.items())))
        object.__setattr__(self, "determined", det)

    def _query(self, a: int) -> int:
        if self.determined % a != 0:
            raise UndeterminedResidue(f"residue not determined at {a} (table lcm {self.determined})")
        sol = crt([(r % math.gcd(a, b), math.gcd(a, b)) for b, r in self.entries.items()])
        assert sol is not None and sol[1] % a == 0  # coherence was validated
        return sol[0] % a

    def __repr__(self):
        return f"TableResidue({self.entries}, mod {self.modulus})"


class ReducedResidue(ProfiniteResidue):
    """A residue restricted to a smaller (infinite) modulus; queries delegate."""

    __slots__ = ("parent",)

    def __init__(self, parent: ProfiniteResidue, modulus):
        super().__init__(modulus)
        object.__setattr__(self, "parent", parent)

    def _query(self, a: int) -> int:
        return self.parent.query(a)

    def __repr__(self):
        return f"ReducedResidue({self.parent!r}, mod {self.modulus})"
