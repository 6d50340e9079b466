"""Two transfer-operator systems over the multiplicative semigroup Nx.

On trigonometric (Laurent) polynomials: the endomorphisms substitute
z -> z^a, and the transfer operator averages over a-th roots, so monomials
map by i^n -> i^{n/a} when a | n and to 0 otherwise.

On the linear span of S^m S*^n (S the unilateral shift): the endomorphisms
send S -> S^a, and the transfer operator is compression by the dilation
isometry e_n -> e_{an}.  On the spanning family, with m >= n,

    S^m S*^n = S^{m-n} (S^n S*^n)  |->  0 unless a | (m - n), else
                                        S^{(m-n)/a} S^i S*^i,  i = ceil(n/a),

and the m < n case follows by adjoints.  A matrix oracle on a finite window
of l^2(N), with per-column clipping, cross-checks the combinatorial rule.

All coefficients are rational and all identities checked here are exact
coefficient identities in the monomial bases.  Values are immutable; the
functions are pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _clean(terms: dict) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


class LaurentPoly:
    """Finitely supported map Z -> Q: coefficients of powers of the circle generator."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        object.__setattr__(self, "c", _clean(coeffs or {}))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: Fraction(1)})

    @classmethod
    def iota(cls, n: int = 1, coeff=1) -> LaurentPoly:
        return cls({n: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.c

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.c)
        for n, v in other.c.items():
            out[n] = out.get(n, Fraction(0)) + v
        return LaurentPoly(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({n: -v for n, v in self.c.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, Fraction] = {}
        for n, v in self.c.items():
            for m, w in other.c.items():
                k = n + m
                out[k] = out.get(k, Fraction(0)) + v * w
        return LaurentPoly(out)

    def scaled(self, c) -> LaurentPoly:
        c = Fraction(c)
        return LaurentPoly({n: c * v for n, v in self.c.items()})

    def star(self) -> LaurentPoly:
        """The adjoint: conjugation, i^n -> i^-n (rational coefficients are fixed)."""
        return LaurentPoly({-n: v for n, v in self.c.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self):
        if self.is_zero:
            return "LaurentPoly(0)"
        bits = [f"{v}*i^{n}" for n, v in sorted(self.c.items())]
        return "LaurentPoly(" + " + ".join(bits) + ")"


class ToeplitzElement:
    """Finitely supported map N^2 -> Q: coefficients of S^m S*^n."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[tuple[int, int], Fraction] | None = None):
        clean = _clean(coeffs or {})
        for m, n in clean:
            if m < 0 or n < 0:
                raise ValueError(f"illegal exponent pair ({m},{n})")
        object.__setattr__(self, "c", clean)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def zero(cls) -> ToeplitzElement:
        return cls()

    @classmethod
    def one(cls) -> ToeplitzElement:
        return cls({(0, 0): Fraction(1)})

    @classmethod
    def shift(cls, m: int = 1, n: int = 0, coeff=1) -> ToeplitzElement:
        """c * S^m S*^n."""
        return cls({(m, n): Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.c

    def __add__(self, other: ToeplitzElement) -> ToeplitzElement:
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ToeplitzElement(out)

    def __neg__(self) -> ToeplitzElement:
        return ToeplitzElement({k: -v for k, v in self.c.items()})

    def __sub__(self, other: ToeplitzElement) -> ToeplitzElement:
        return self + (-other)

    def __mul__(self, other: ToeplitzElement) -> ToeplitzElement:
        # (S^m S*^n)(S^k S*^l): the middle S*^n S^k collapses to a one-sided power.
        out: dict[tuple[int, int], Fraction] = {}
        for (m, n), v in self.c.items():
            for (k, l), w in other.c.items():
                if k >= n:
                    key = (m + k - n, l)
                else:
                    key = (m, l + n - k)
                out[key] = out.get(key, Fraction(0)) + v * w
        return ToeplitzElement(out)

    def scaled(self, c) -> ToeplitzElement:
        c = Fraction(c)
        return ToeplitzElement({k: c * v for k, v in self.c.items()})

    def star(self) -> ToeplitzElement:
        return ToeplitzElement({(n, m): v for (m, n), v in self.c.items()})

    def __eq__(self, other):
        if not isinstance(other, ToeplitzElement):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self):
        if self.is_zero:
            return "ToeplitzElement(0)"
        bits = [f"{v}*S^{m}S*^{n}" for (m, n), v in sorted(self.c.items())]
        return "ToeplitzElement(" + " + ".join(bits) + ")"


def endo(a: int, x):
    """The a-th power endomorphism: i^n -> i^{an} on polynomials, S -> S^a on the span.

    Unital and multiplicative, with endo(a, endo(b, x)) = endo(ab, x).
    """
    if a < 1:
        raise ValueError("a must be a positive natural")
    if isinstance(x, LaurentPoly):
        return LaurentPoly({a * n: v for n, v in x.c.items()})
    if isinstance(x, ToeplitzElement):
        return ToeplitzElement({(a * m, a * n): v for (m, n), v in x.c.items()})
    raise TypeError(f"no endomorphism on {type(x).__name__}")


def _ceil_div(n: int, a: int) -> int:
    return -(-n // a)


def _transfer_monomial(a: int, m: int, n: int) -> tuple[int, int] | None:
    """Image key of S^m S*^n under the transfer operator, or None for zero."""
    if m >= n:
        if (m - n) % a:
            return None
        i = _ceil_div(n, a)
        return ((m - n) // a + i, i)
    if (n - m) % a:
        return None
    i = _ceil_div(m, a)
    return (i, (n - m) // a + i)


def transfer(a: int, x):
    """The transfer operator for the a-th power endomorphism.

    Positive, unital, linear; satisfies transfer(a, endo(a, x) * y) =
    x * transfer(a, y) and transfer(a, endo(a, x)) = x.
    """
    if a < 1:
        raise ValueError("a must be a positive natural")
    if isinstance(x, LaurentPoly):
        return LaurentPoly({n // a: v for n, v in x.c.items() if n % a == 0})
    if isinstance(x, ToeplitzElement):
        out: dict[tuple[int, int], Fraction] = {}
        for (m, n), v in x.c.items():
            key = _transfer_monomial(a, m, n)
            if key is not None:
                out[key] = out.get(key, Fraction(0)) + v
        return ToeplitzElement(out)
    raise TypeError(f"no transfer operator on {type(x).__name__}")


def symbol_map(t: ToeplitzElement) -> LaurentPoly:
    """The symbol of a Toeplitz-span element: S^m S*^n -> i^{m-n}, linearly.

    A unital multiplicative *-map onto the polynomial algebra; it intertwines
    the two systems' endomorphisms and transfer operators.
    """
    out: dict[int, Fraction] = {}
    for (m, n), v in t.c.items():
        k = m - n
        out[k] = out.get(k, Fraction(0)) + v
    return LaurentPoly(out)


@dataclass(frozen=True)
class Compress:
    """The compression V_a* (arg) V_a by the dilation isometry e_n -> e_{an}."""

    a: int
    arg: object  # ToeplitzElement | Compress


CLIPPED = object()


@dataclass(frozen=True)
class OracleMatrix:
    """Exact matrix on l^2({0..size-1}) with per-column clipping.

    A column is clipped when some intermediate index of the operator word
    leaves the window; clipped columns carry no trustworthy entries and are
    excluded from comparisons.
    """

    size: int
    columns: tuple  # tuple of dict[int, Fraction] | None (None = clipped)

    @property
    def clipped(self) -> frozenset[int]:
        return frozenset(j for j, col in enumerate(self.columns) if col is None)

    def entry(self, i: int, j: int):
        col = self.columns[j]
        if col is None:
            return CLIPPED
        return col.get(i, Fraction(0))


def _column_of(expr, j: int, size: int):
    """Image of e_j as {i: coeff}, or None when clipped."""
    if isinstance(expr, Compress):
        up = expr.a * j
        if up >= size:
            return None
        inner = _column_of(expr.arg, up, size)
        if inner is None:
            return None
        out: dict[int, Fraction] = {}
        for i, v in inner.items():
            if i % expr.a == 0:
                k = i // expr.a
                out[k] = out.get(k, Fraction(0)) + v
        return out
    if isinstance(expr, ToeplitzElement):
        out = {}
        for (m, n), v in expr.c.items():
            if j < n:
                continue
            i = j - n + m
            if i >= size:
                return None
            out[i] = out.get(i, Fraction(0)) + v
        return {i: v for i, v in out.items() if v != 0}
    raise TypeError(f"cannot build a matrix for {type(expr).__name__}")


def matrix_oracle(expr, size: int) -> OracleMatrix:
    """The matrix of the expression on l^2({0..size-1}), S e_n = e_{n+1}, V_a e_n = e_{an}."""
    if size < 1:
        raise ValueError("window must contain at least one basis vector")
    return OracleMatrix(size, tuple(_column_of(expr, j, size) for j in range(size)))


def oracles_agree(m1: OracleMatrix, m2: OracleMatrix) -> bool:
    """Equality of all columns unclipped in both matrices."""
    if m1.size != m2.size:
        raise ValueError("window sizes differ")
    return all(
        c1 == c2
        for c1, c2 in zip(m1.columns, m2.columns)
        if c1 is not None and c2 is not None
    )


def spanning_elements(max_degree: int):
    """The monomials S^m S*^n with m, n <= max_degree."""
    return [
        ToeplitzElement.shift(m, n)
        for m in range(max_degree + 1)
        for n in range(max_degree + 1)
    ]
