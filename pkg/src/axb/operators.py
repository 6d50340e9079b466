"""Symbolic *-algebra of covariance monomials and exact basis-action backends.

A monomial W_x W_y* is a pair of semigroup elements; products follow the
covariance rewrite

    W_y* W_x = W_{y^-1 (y∨x)} W_{x^-1 (y∨x)}*   when y ∨ x exists, else 0,

so products of monomials are monomials or zero and every generator word has
an exact normal form as a rational combination of pairs.  Backends realise
the generators as partial injections of a basis index set: the Toeplitz
backend on the semigroup itself, and a bilateral backend on Z x Nx whose
additive generator is a basis bijection.  Operators map basis vectors to
basis vectors or to zero, so all window checks are exact with no truncation
error.

Everything here is pure and immutable; window sweeps are safe to run
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from axb.arithmetic import prime_factors
from axb.semigroup import SemigroupElement, left_quotient, lub

# A letter is (generator, adjoint?); a word is a tuple of letters applied left to right
# to vectors, i.e. the rightmost letter acts first.
Letter = tuple[SemigroupElement, bool]
Word = tuple[Letter, ...]


class WordSum(tuple):
    """A rational combination of words: ((coeff, word), ...).

    A distinct type so the empty sum (the zero operator) is not mistaken for
    the empty word (the identity).
    """

S_GEN = SemigroupElement(1, 1)


def s_word(power: int = 1) -> Word:
    return ((S_GEN, False),) * power


def v_word(p: int, power: int = 1) -> Word:
    return ((SemigroupElement(0, p), False),) * power


def adjoint_word(word: Word) -> Word:
    return tuple((x, not star) for x, star in reversed(word))


def generator_word(x: SemigroupElement) -> Word:
    """The word s^m v_p1^e1 v_p2^e2 ... for x = (m, a), primes ascending."""
    word = list(s_word(x.m))
    for p, e in prime_factors(x.a):
        word.extend(v_word(p, e))
    return tuple(word)


IDENTITY_WORD: Word = ()

Monomial = tuple[SemigroupElement, SemigroupElement]

ONE_MONOMIAL: Monomial = (SemigroupElement.identity(), SemigroupElement.identity())


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial | None:
    """(W_x1 W_y1*)(W_x2 W_y2*) as a monomial, or None for zero."""
    x1, y1 = m1
    x2, y2 = m2
    z = lub(y1, x2)
    if z is None:
        return None
    return x1 * left_quotient(y1, z), y2 * left_quotient(x2, z)


def mono_adjoint(m: Monomial) -> Monomial:
    return m[1], m[0]


class OperatorExpr:
    """A finite rational combination of monomials W_x W_y*.

    Zero coefficients are never stored; the zero element is the empty
    combination.  Multiplication extends the monomial rewrite bilinearly.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        clean = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("operator expressions are immutable")

    @classmethod
    def zero(cls) -> OperatorExpr:
        return cls()

    @classmethod
    def one(cls) -> OperatorExpr:
        return cls({ONE_MONOMIAL: Fraction(1)})

    @classmethod
    def monomial(cls, x: SemigroupElement, y: SemigroupElement, coeff=1) -> OperatorExpr:
        return cls({(x, y): Fraction(coeff)})

    @classmethod
    def range_projection(cls, x: SemigroupElement) -> OperatorExpr:
        """W_x W_x*."""
        return cls.monomial(x, x)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def __add__(self, other: OperatorExpr) -> OperatorExpr:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return OperatorExpr(out)

    def __neg__(self) -> OperatorExpr:
        return OperatorExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: OperatorExpr) -> OperatorExpr:
        return self + (-other)

    def scaled(self, c) -> OperatorExpr:
        c = Fraction(c)
        return OperatorExpr({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: OperatorExpr) -> OperatorExpr:
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                if m is not None:
                    out[m] = out.get(m, Fraction(0)) + c1 * c2
        return OperatorExpr(out)

    def adjoint(self) -> OperatorExpr:
        return OperatorExpr({mono_adjoint(m): c for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if self.is_zero:
            return "OperatorExpr(0)"
        bits = [f"{c}*W{x}W{y}*" for (x, y), c in sorted(self.terms.items(), key=str)]
        return "OperatorExpr(" + " + ".join(bits) + ")"


def normalize(word_or_sum) -> OperatorExpr:
    """Exact normal form of a word (or word sum) as a combination of monomials.

    Valid in every representation satisfying the covariance rewrite; in
    particular sound for both backends here.  Normalising an OperatorExpr is
    the identity.
    """
    if isinstance(word_or_sum, OperatorExpr):
        return word_or_sum
    if isinstance(word_or_sum, WordSum):
        out = OperatorExpr.zero()
        for c, word in word_or_sum:
            out = out + normalize(word).scaled(c)
        return out
    expr = OperatorExpr.one()
    for x, star in word_or_sum:
        factor = OperatorExpr.monomial(SemigroupElement.identity(), x) if star else (
            OperatorExpr.monomial(x, SemigroupElement.identity())
        )
        expr = expr * factor
        if expr.is_zero:
            return expr
    return expr


class ToeplitzBackend:
    """Basis indexed by the semigroup itself: W_x e_z = e_{xz}."""

    name = "toeplitz"

    @staticmethod
    def contains_index(idx) -> bool:
        return idx[0] >= 0 and idx[1] >= 1

    @staticmethod
    def act(x: SemigroupElement, idx):
        return (x.m + x.a * idx[0], x.a * idx[1])

    @staticmethod
    def act_adjoint(x: SemigroupElement, idx):
        dm = idx[0] - x.m
        if dm < 0 or dm % x.a or idx[1] % x.a:
            return None
        return (dm // x.a, idx[1] // x.a)

    @staticmethod
    def window(m_max: int = 24, a_max: int = 20):
        return [(m, a) for m in range(m_max + 1) for a in range(1, a_max + 1)]


class BilateralBackend:
    """Basis indexed by Z x Nx; the additive generator acts as a basis bijection."""

    name = "bilateral"

    @staticmethod
    def contains_index(idx) -> bool:
        return idx[1] >= 1

    @staticmethod
    def act(x: SemigroupElement, idx):
        return (x.m + x.a * idx[0], x.a * idx[1])

    @staticmethod
    def act_adjoint(x: SemigroupElement, idx):
        dm = idx[0] - x.m
        if dm % x.a or idx[1] % x.a:
            return None
        return (dm // x.a, idx[1] // x.a)

    @staticmethod
    def window(m_max: int = 12, a_max: int = 20):
        ms = sorted(range(-m_max, m_max + 1), key=lambda m: (abs(m), m))
        return [(m, a) for m in ms for a in range(1, a_max + 1)]


def apply_word(backend, word: Word, idx):
    """Image basis index of e_idx under the word, or None when annihilated."""
    for x, star in reversed(word):
        idx = backend.act_adjoint(x, idx) if star else backend.act(x, idx)
        if idx is None:
            return None
    return idx


def apply(backend, operator, idx) -> dict:
    """Exact image vector of the basis vector e_idx as a map index -> coefficient.

    ``operator`` may be a word, a word sum, or an OperatorExpr.
    """
    out: dict = {}

    def add(j, c):
        if j is None:
            return
        new = out.get(j, Fraction(0)) + c
        if new:
            out[j] = new
        else:
            out.pop(j, None)

    if isinstance(operator, OperatorExpr):
        for (x, y), c in operator.items():
            j = backend.act_adjoint(y, idx)
            if j is not None:
                add(backend.act(x, j), c)
        return out
    if isinstance(operator, WordSum):
        for c, word in operator:
            add(apply_word(backend, word, idx), c)
        return out
    add(apply_word(backend, operator, idx), Fraction(1))
    return out


def word_sum(*terms) -> WordSum:
    return WordSum((Fraction(c), tuple(word)) for c, word in terms)


@dataclass(frozen=True)
class RelationInstance:
    label: str
    lhs: WordSum
    rhs: WordSum


def relation_instances(name: str, primes: list[int], s_power_max: int = 1) -> list[RelationInstance]:
    """Concrete instances of a named relation for the given primes.

    T1 instances include powered variants v_p s^e = s^(pe) v_p for
    e <= s_power_max.
    """
    out = []
    if name == "T1":
        for p in primes:
            for e in range(1, s_power_max + 1):
                out.append(
                    RelationInstance(
                        f"T1[p={p},e={e}]",
                        word_sum((1, v_word(p) + s_word(e))),
                        word_sum((1, s_word(p * e) + v_word(p))),
                    )
                )
    elif name == "T2":
        for p in primes:
            for q in primes:
                if p < q:
                    out.append(
                        RelationInstance(
                            f"T2[p={p},q={q}]",
                            word_sum((1, v_word(p) + v_word(q))),
                            word_sum((1, v_word(q) + v_word(p))),
                        )
                    )
    elif name == "T3":
        for p in primes:
            for q in primes:
                if p != q:
                    out.append(
                        RelationInstance(
                            f"T3[p={p},q={q}]",
                            word_sum((1, adjoint_word(v_word(p)) + v_word(q))),
                            word_sum((1, v_word(q) + adjoint_word(v_word(p)))),
                        )
                    )
    elif name == "T4":
        for p in primes:
            out.append(
                RelationInstance(
                    f"T4[p={p}]",
                    word_sum((1, adjoint_word(s_word()) + v_word(p))),
                    word_sum((1, s_word(p - 1) + v_word(p) + adjoint_word(s_word()))),
                )
            )
    elif name == "T5":
        for p in primes:
            for k in range(1, p):
                out.append(
                    RelationInstance(
                        f"T5[p={p},k={k}]",
                        word_sum((1, adjoint_word(v_word(p)) + s_word(k) + v_word(p))),
                        word_sum(),
                    )
                )
    elif name == "Q5":
        for p in primes:
            terms = []
            for k in range(p):
                w = s_word(k) + v_word(p)
                terms.append((1, w + adjoint_word(w)))
            out.append(
                RelationInstance(
                    f"Q5[p={p}]", word_sum(*terms), word_sum((1, IDENTITY_WORD))
                )
            )
    elif name == "Q6":
        out.append(
            RelationInstance(
                "Q6",
                word_sum((1, s_word() + adjoint_word(s_word()))),
                word_sum((1, IDENTITY_WORD)),
            )
        )
    else:
        raise ValueError(f"unknown relation {name!r}")
    return out


@dataclass
class VerificationReport:
    """Outcome of a windowed relation sweep.  A sampled check, not a proof."""

    backend: str
    window_size: int
    checked: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_relations(
    backend, names, primes: list[int], window=None, s_power_max: int = 1
) -> VerificationReport:
    """Check each relation instance on every window index, exactly."""
    if window is None:
        window = backend.window()
    report = VerificationReport(backend.name, len(window))
    for name in names:
        for inst in relation_instances(name, primes, s_power_max):
            for idx in window:
                lhs = apply(backend, inst.lhs, idx)
                rhs = apply(backend, inst.rhs, idx)
                report.checked += 1
                if lhs != rhs:
                    if len(report.failures) < 32:
                        report.failures.append((inst.label, idx, lhs, rhs))
                    else:
                        return report
    return report


def faithfulness_witness(backend, primes_f, include_unit_defect: bool, window=None):
    """A basis index on which prod_{p in F} prod_{k<p} (1 - W_(k,p) W_(k,p)*)
    (prefixed by 1 - W_(1,1) W_(1,1)* when include_unit_defect) acts as the
    identity, certifying the product nonzero.  Returns None when the window
    is exhausted, which is not a proof of vanishing.
    """
    killers = [SemigroupElement(k, p) for p in primes_f for k in range(p)]
    if include_unit_defect:
        killers.append(S_GEN)
    if window is None:
        window = backend.window()
    for idx in window:
        if all(backend.act_adjoint(x, idx) is None for x in killers):
            return idx
    return None


@dataclass(frozen=True)
class DefectTerm:
    """One summand c (1 - sum_{l<p} W_(l,p) W_(l,p)*) c* of a defect decomposition."""

    conjugator: Word
    prime: int


def unit_defect_expr(a: int) -> OperatorExpr:
    """1 - sum_{k<a} W_(k,a) W_(k,a)*."""
    expr = OperatorExpr.one()
    for k in range(a):
        expr = expr - OperatorExpr.range_projection(SemigroupElement(k, a))
    return expr


def defect_decomposition(a: int) -> list[DefectTerm]:
    """Write 1 - sum_{k<a} W_(k,a) W_(k,a)* as sum_i c_i g_i c_i* with prime defects g_i.

    Follows the prime factorisation: for a = bp the length-a defect splits
    into the b conjugates s^j v_b (prime-p defect) (s^j v_b)* plus the
    length-b defect, recursively.  For a = 1 the left side is zero and the
    decomposition is empty.
    """
    if a < 1:
        raise ValueError("a must be a positive natural")
    if a == 1:
        return []
    p = prime_factors(a)[0][0]
    if a == p:
        return [DefectTerm(IDENTITY_WORD, p)]
    b = a // p
    terms = [DefectTerm(generator_word(SemigroupElement(j, b)), p) for j in range(b)]
    return terms + defect_decomposition(b)


def defect_terms_expr(terms: list[DefectTerm]) -> OperatorExpr:
    total = OperatorExpr.zero()
    for t in terms:
        c = normalize(t.conjugator)
        total = total + c * unit_defect_expr(t.prime) * c.adjoint()
    return total


def verify_defect_decomposition(a: int, backend=None, window=None) -> bool:
    """Symbolic check of the decomposition identity, plus a backend window check."""
    lhs = unit_defect_expr(a)
    rhs = defect_terms_expr(defect_decomposition(a))
    if lhs != rhs:
        return False
    if backend is None:
        backend = ToeplitzBackend()
    if window is None:
        window = backend.window(2 * a, max(a + 1, 12))
    return all(apply(backend, lhs, idx) == apply(backend, rhs, idx) for idx in window)


def nica_product_check(backend, x: SemigroupElement, y: SemigroupElement, window=None) -> bool:
    """W_x W_x* W_y W_y* agrees with W_{x∨y} W_{x∨y}* (or 0) on all window indices."""
    wx, wy = generator_word(x), generator_word(y)
    lhs = word_sum((1, wx + adjoint_word(wx) + wy + adjoint_word(wy)))
    z = lub(x, y)
    if z is None:
        rhs = word_sum()
    else:
        wz = generator_word(z)
        rhs = word_sum((1, wz + adjoint_word(wz)))
    if window is None:
        window = backend.window()
    return all(apply(backend, lhs, idx) == apply(backend, rhs, idx) for idx in window)


def toeplitz_presentation_names() -> list[str]:
    return ["T1", "T2", "T3", "T4", "T5"]


def additive_presentation_names() -> list[str]:
    return ["T1", "T2", "T3", "T5", "Q6"]


__all__ = [
    "Word",
    "WordSum",
    "Monomial",
    "OperatorExpr",
    "ToeplitzBackend",
    "BilateralBackend",
    "normalize",
    "apply",
    "apply_word",
    "word_sum",
    "s_word",
    "v_word",
    "adjoint_word",
    "generator_word",
    "relation_instances",
    "verify_relations",
    "VerificationReport",
    "faithfulness_witness",
    "DefectTerm",
    "unit_defect_expr",
    "defect_decomposition",
    "defect_terms_expr",
    "verify_defect_decomposition",
    "nica_product_check",
    "mono_mul",
    "toeplitz_presentation_names",
    "additive_presentation_names",
]
