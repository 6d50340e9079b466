"""Coordinate models of the Hilbert bimodules of the two transfer systems.

For each positive a, the bimodule over the coefficient algebra (polynomials
or the Toeplitz span) has an orthonormal basis given by the images of the
first a powers of the generator, so a vector is stored as its tuple of a
coefficient-algebra coordinates.  The embedding of a coefficient element x
has k-th coordinate transfer(a, gen^-k * x); the semi-inner-product null
space is quotiented away by construction, which keeps equality decidable.

Operators on a module are a x a matrices over the coefficient algebra acting
on coordinate columns; rank-one operators, the left action, and the
extension maps along divisibility all land in this class.  The symbol map of
the Toeplitz span induces a morphism of the whole structure onto the
polynomial side, applied coordinate-wise.

Vectors and matrices are immutable; operations are pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass

from axb.transfer import LaurentPoly, ToeplitzElement, endo, symbol_map, transfer


def _gen(example, k: int):
    """gen^k in the coefficient algebra of the same kind as ``example``."""
    if isinstance(example, LaurentPoly):
        return LaurentPoly.iota(k)
    return ToeplitzElement.shift(k, 0)


def _gen_star(example, k: int):
    if isinstance(example, LaurentPoly):
        return LaurentPoly.iota(-k)
    return ToeplitzElement.shift(0, k)


def _one(example):
    return type(example).one()


def _zero(example):
    return type(example).zero()


@dataclass(frozen=True)
class ModuleVector:
    """A vector of the bimodule at level a, in orthonormal-basis coordinates."""

    a: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.a:
            raise ValueError("coordinate tuple must have length a")

    @property
    def kind(self):
        return type(self.coords[0])

    def __add__(self, other: ModuleVector) -> ModuleVector:
        self._match(other)
        return ModuleVector(self.a, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: ModuleVector) -> ModuleVector:
        self._match(other)
        return ModuleVector(self.a, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def scaled(self, c) -> ModuleVector:
        return ModuleVector(self.a, tuple(x.scaled(c) for x in self.coords))

    def right_mul(self, g) -> ModuleVector:
        """The right action of a coefficient element."""
        return ModuleVector(self.a, tuple(x * g for x in self.coords))

    def _match(self, other):
        if self.a != other.a or self.kind is not other.kind:
            raise ValueError("module mismatch")

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.coords)


def embed(a: int, x) -> ModuleVector:
    """The image of the coefficient element x in the level-a module.

    Linear, and kills exactly the null space of the semi-inner product.
    """
    if a < 1:
        raise ValueError("a must be a positive natural")
    return ModuleVector(a, tuple(transfer(a, _gen_star(x, k) * x) for k in range(a)))


def basis_vector(a: int, k: int, kind=LaurentPoly) -> ModuleVector:
    coords = [kind.zero()] * a
    coords[k] = kind.one()
    return ModuleVector(a, tuple(coords))


def inner(v: ModuleVector, w: ModuleVector):
    """The coefficient-algebra inner product <v, w> = sum_k v_k* w_k."""
    v._match(w)
    out = _zero(v.coords[0])
    for x, y in zip(v.coords, w.coords):
        out = out + x.star() * y
    return out


def representative(v: ModuleVector):
    """A coefficient element mapping onto v: sum_k gen^k endo_a(v_k)."""
    out = _zero(v.coords[0])
    for k, c in enumerate(v.coords):
        out = out + _gen(c, k) * endo(v.a, c)
    return out


def module_mult(v: ModuleVector, w: ModuleVector) -> ModuleVector:
    """The product-system multiplication, landing in the level-(ab) module.

    On embeds: embed(a, f) * embed(b, g) = embed(ab, f * endo_a(g)); the
    result does not depend on the chosen representatives.
    """
    if v.kind is not w.kind:
        raise ValueError("module mismatch")
    f = representative(v)
    g = representative(w)
    return embed(v.a * w.a, f * endo(v.a, g))


@dataclass(frozen=True)
class ModuleOperator:
    """An a x a matrix over the coefficient algebra, acting on coordinate columns."""

    a: int
    rows: tuple  # tuple of tuples of coefficient elements

    def __post_init__(self):
        if len(self.rows) != self.a or any(len(r) != self.a for r in self.rows):
            raise ValueError("operator matrix must be a x a")

    @property
    def kind(self):
        return type(self.rows[0][0])

    @classmethod
    def identity(cls, a: int, kind=LaurentPoly) -> ModuleOperator:
        one, zero = kind.one(), kind.zero()
        return cls(a, tuple(tuple(one if i == j else zero for j in range(a)) for i in range(a)))

    @classmethod
    def zero(cls, a: int, kind=LaurentPoly) -> ModuleOperator:
        zero = kind.zero()
        return cls(a, tuple(tuple(zero for _ in range(a)) for _ in range(a)))

    def __add__(self, other: ModuleOperator) -> ModuleOperator:
        return ModuleOperator(
            self.a,
            tuple(
                tuple(x + y for x, y in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other: ModuleOperator) -> ModuleOperator:
        return ModuleOperator(
            self.a,
            tuple(
                tuple(x - y for x, y in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            ),
        )

    def __mul__(self, other: ModuleOperator) -> ModuleOperator:
        if self.a != other.a:
            raise ValueError("operator size mismatch")
        z = _zero(self.rows[0][0])
        rows = []
        for i in range(self.a):
            row = []
            for j in range(self.a):
                acc = z
                for k in range(self.a):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return ModuleOperator(self.a, tuple(rows))

    def __call__(self, v: ModuleVector) -> ModuleVector:
        if v.a != self.a:
            raise ValueError("operator size mismatch")
        coords = []
        for i in range(self.a):
            acc = _zero(v.coords[0])
            for j in range(self.a):
                acc = acc + self.rows[i][j] * v.coords[j]
            coords.append(acc)
        return ModuleVector(self.a, tuple(coords))


def rank_one(m: ModuleVector, n: ModuleVector) -> ModuleOperator:
    """Theta_{m,n}: v -> m <n, v>."""
    m._match(n)
    rows = tuple(
        tuple(m.coords[i] * n.coords[j].star() for j in range(m.a)) for i in range(m.a)
    )
    return ModuleOperator(m.a, rows)


def left_action(a: int, x) -> ModuleOperator:
    """The (finite-rank) left action of the coefficient element x at level a."""
    rows = tuple(
        tuple(transfer(a, _gen_star(x, l) * x * _gen(x, k)) for k in range(a))
        for l in range(a)
    )
    return ModuleOperator(a, rows)


def extend_to_multiple(op: ModuleOperator, n: int) -> ModuleOperator:
    """Extension of a level-a operator along the factorisation n = a * b.

    Characterised by extend(R)(v * w) = (R v) * w for v at level a and w at
    level b; the identity extends to the identity.
    """
    a = op.a
    if n % a:
        raise ValueError(f"{a} does not divide {n}")
    b = n // a
    kind = op.kind
    zero = kind.zero()
    rows = [[zero] * n for _ in range(n)]
    for i in range(a):
        for j in range(a):
            x = op.rows[i][j]
            for l in range(b):
                for k in range(b):
                    rows[i + a * l][j + a * k] = transfer(b, _gen_star(x, l) * x * _gen(x, k))
    return ModuleOperator(n, tuple(tuple(r) for r in rows))


def unit_rank_one(a: int, kind=LaurentPoly) -> ModuleOperator:
    """Theta_{q_a(1), q_a(1)}."""
    one = embed(a, kind.one())
    return rank_one(one, one)


def nica_pair(p: int, r: int, kind=LaurentPoly) -> ModuleOperator:
    """extend(Theta_{q_p(1),q_p(1)}) * extend(Theta_{q_r(1),q_r(1)}) at level pr.

    For both coefficient algebras this equals Theta_{q_pr(1), q_pr(1)}.
    """
    if p == r:
        raise ValueError("the two levels must be distinct primes")
    lhs = extend_to_multiple(unit_rank_one(p, kind), p * r)
    rhs = extend_to_multiple(unit_rank_one(r, kind), p * r)
    return lhs * rhs


# Collapse identities of the embedding into the Toeplitz-span module.


def absorb_projection_check(a: int, n: int, j: int) -> bool:
    """embed(a, S^n S^j S*^j) = embed(a, S^n endo_a(transfer_a(S^j S*^j)))."""
    t = ToeplitzElement.shift(n + j, j)
    collapsed = ToeplitzElement.shift(n, 0) * endo(a, transfer(a, ToeplitzElement.shift(j, j)))
    return embed(a, t) == embed(a, collapsed)


def absorb_adjoint_check(a: int, m: int, j: int) -> bool:
    """embed(a, S*^m) = embed(a, S^j S*^j S*^m) when m and m+j share a block.

    The blocks are the intervals (a(i-1), ai]; the precondition is rejected
    otherwise.
    """
    if m >= 1 and _ceil(m, a) != _ceil(m + j, a):
        raise ValueError(f"m={m} and m+j={m + j} lie in different blocks of size {a}")
    if m == 0 and j > 0:
        raise ValueError("m=0 sits in no positive block; need j=0")
    lhs = ToeplitzElement.shift(0, m)
    rhs = ToeplitzElement.shift(j, j) * lhs
    return embed(a, lhs) == embed(a, rhs)


def _ceil(n: int, a: int) -> int:
    return -(-n // a)


def iterated_transfer_collapse_check(p: int, r: int, t: ToeplitzElement) -> bool:
    """embed(pr, E_p E_r (t)) = embed(pr, E_pr (t)) for E_a = endo_a . transfer_a.

    The two arguments differ in the coefficient algebra in general, yet have
    the same image in the level-pr module.
    """
    if p == r:
        raise ValueError("the two levels must be distinct primes")
    one_step = endo(p * r, transfer(p * r, t))
    two_step = endo(p, transfer(p, endo(r, transfer(r, t))))
    return embed(p * r, one_step) == embed(p * r, two_step)


# The morphism induced by the symbol map.


def symbol_map_vector(v: ModuleVector) -> ModuleVector:
    """Coordinate-wise symbol map: the module morphism over the symbol map."""
    if v.kind is not ToeplitzElement:
        raise ValueError("expected a Toeplitz-span module vector")
    return ModuleVector(v.a, tuple(symbol_map(c) for c in v.coords))


def symbol_map_operator(op: ModuleOperator) -> ModuleOperator:
    """Entry-wise symbol map on module operators."""
    if op.kind is not ToeplitzElement:
        raise ValueError("expected a Toeplitz-span module operator")
    return ModuleOperator(
        op.a, tuple(tuple(symbol_map(x) for x in row) for row in op.rows)
    )
