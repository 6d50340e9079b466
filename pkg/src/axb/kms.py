"""Time-evolution scaling, equilibrium-state evaluation, and the morphism cube.

The dynamics fixes the additive generator and scales the multiplicative
generator of weight p by p^{it}; a monomial W_(m,a) W_(n,b)* therefore
scales by (a/b)^{it}.  Equilibrium states at inverse temperature beta are
evaluated on the family of range projections W_(k,a) W_(k,a)* where they
take the value a^-beta; values are kept exact as rational combinations of
radicals so the phase predicate is decided with no floating point.

The eight algebra nodes (the universal algebra, its additive,
multiplicative, and full boundary quotients, and the four product-system
algebras over the two coefficient algebras) form a cube of morphisms which
is checked to commute on generators, using the concrete coordinate models.

Pure and immutable throughout; safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from axb.arithmetic import prime_factors, primes_up_to
from axb.modules import ModuleVector, embed, symbol_map_vector
from axb.operators import Monomial, OperatorExpr
from axb.semigroup import SemigroupElement
from axb.transfer import LaurentPoly, ToeplitzElement, symbol_map

GROUND = "ground"
KMS_INFINITY = "kms-infinity"


def dynamics_scale(m: Monomial) -> Fraction:
    """The scaling ratio a/b of W_(m,a) W_(n,b)* under the time evolution."""
    x, y = m
    return Fraction(x.a, y.a)


class ExactValue:
    """A rational combination of real radicals d^(1/q), kept in canonical form.

    Terms are keyed by (q, d) with d a q-th-power-free positive integer and
    the exponent in lowest terms; the rational part is the (1, 1) term.
    Distinct canonical radicals are linearly independent over Q, so equality
    of canonical forms decides equality of values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        object.__setattr__(
            self, "terms", {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def rational(cls, c) -> ExactValue:
        return cls({(1, 1): Fraction(c)})

    @classmethod
    def power(cls, base: int, exponent: Fraction) -> ExactValue:
        """base^exponent for a positive integer base and rational exponent."""
        if base < 1:
            raise ValueError("base must be a positive integer")
        exponent = Fraction(exponent)
        if base == 1:
            return cls.rational(1)
        t = math.floor(exponent)
        frac = exponent - t
        coeff = Fraction(base) ** t
        if frac == 0:
            return cls.rational(coeff)
        q, u = frac.denominator, frac.numerator
        # split base^(u/q) into an integer part and a q-th-power-free radical
        outside, radical_exps = 1, {}
        for p, e in prime_factors(base):
            outside *= p ** (e * u // q)
            rem = (e * u) % q
            if rem:
                radical_exps[p] = rem
        if not radical_exps:
            return cls.rational(coeff * outside)
        g = math.gcd(q, math.gcd(*radical_exps.values()))
        q //= g
        radical = 1
        for p, e in radical_exps.items():
            radical *= p ** (e // g)
        return cls({(q, radical): coeff * outside})

    def __add__(self, other: ExactValue) -> ExactValue:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ExactValue(out)

    def scaled(self, c) -> ExactValue:
        c = Fraction(c)
        return ExactValue({k: c * v for k, v in self.terms.items()})

    def approx(self) -> float:
        return sum(float(v) * d ** (1.0 / q) for (q, d), v in self.terms.items())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactValue.rational(other)
        if not isinstance(other, ExactValue):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "ExactValue(0)"
        bits = []
        for (q, d), v in sorted(self.terms.items()):
            bits.append(str(v) if (q, d) == (1, 1) else f"{v}*{d}^(1/{q})")
        return "ExactValue(" + " + ".join(bits) + ")"


class NotEvaluable(ValueError):
    """The element lies outside the family on which state values are recorded."""


def _check_beta(beta) -> Fraction:
    beta = Fraction(beta)
    if beta < 1:
        raise ValueError(f"states exist for inverse temperature >= 1, got {beta}")
    return beta


def kms_value(params, expr: OperatorExpr) -> ExactValue:
    """Evaluate a state on the evaluable family.

    ``params`` is a rational inverse temperature >= 1, KMS_INFINITY, or
    GROUND.  Evaluable elements are nonnegative rational combinations of the
    identity and the range projections W_(k,a) W_(k,a)*, each worth a^-beta.
    The value for composite a extends the recorded prime values by
    multiplicativity over commuting generators.  At GROUND the projections
    with a >= 2 are worth 0, and non-identity projections with a = 1 are
    rejected (their values are not determined by the evaluation rules).
    """
    if not isinstance(expr, OperatorExpr):
        raise NotEvaluable("expected a combination of monomials")
    total = ExactValue()
    for (x, y), c in expr.items():
        if x != y:
            raise NotEvaluable(f"monomial W{x}W{y}* is not a range projection")
        if c < 0:
            raise NotEvaluable("evaluable combinations have nonnegative coefficients")
        assert dynamics_scale((x, y)) == 1  # the evaluable family is fixed by the flow
        a = x.a
        if params == GROUND:
            if a == 1 and x.m > 0:
                raise NotEvaluable(
                    f"value at W{x}W{x}* is not determined for ground states"
                )
            val = ExactValue.rational(1 if a == 1 else 0)
        elif params == KMS_INFINITY:
            val = ExactValue.rational(1 if a == 1 else 0)
        else:
            val = ExactValue.power(a, -_check_beta(params))
        total = total + val.scaled(c)
    return total


def projection_expr(k: int, a: int) -> OperatorExpr:
    """W_(k,a) W_(k,a)*."""
    return OperatorExpr.range_projection(SemigroupElement(k, a))


def prime_projection_sum(p: int) -> OperatorExpr:
    """sum_{k<p} W_(k,p) W_(k,p)*."""
    expr = OperatorExpr.zero()
    for k in range(p):
        expr = expr + projection_expr(k, p)
    return expr


GROUND_FACTORS_IFF_KMS_LIMIT = "iff-kms-limit"


def factors_through(params, quotient: str, prime_bound: int = 100):
    """Whether the state descends along the named quotient map.

    ``quotient`` is "additive" (the quotient making the additive generator
    unitary) or "multiplicative" (the quotient imposing the full partitions
    of unity).  Every finite-temperature state factors through the additive
    quotient; it factors through the multiplicative one iff the partition
    sums all evaluate to 1, which is checked exactly for every prime up to
    prime_bound.  For GROUND on the additive quotient the answer is the
    conditional predicate GROUND_FACTORS_IFF_KMS_LIMIT rather than a bool.
    """
    if quotient == "additive":
        if params == GROUND:
            return GROUND_FACTORS_IFF_KMS_LIMIT
        if params != KMS_INFINITY:
            _check_beta(params)
        return True
    if quotient == "multiplicative":
        if params == GROUND:
            return False
        return all(
            kms_value(params, prime_projection_sum(p)) == 1
            for p in primes_up_to(prime_bound)
        )
    raise ValueError(f"unknown quotient {quotient!r}")


# --- The commuting cube -----------------------------------------------------
#
# Left nodes carry the presentation vocabulary; right nodes are modelled by
# tagged concrete elements: CoefElem(c) for the image of a coefficient
# element, ModElem(a, v) for the image of a level-a module vector.

RELATIONS = ("T1", "T2", "T3", "T4", "T5", "Q5", "Q6")


@dataclass(frozen=True)
class AlgebraNode:
    """One vertex of the cube: presented relations plus those they imply."""

    name: str
    presented: frozenset
    satisfied: frozenset
    side: str  # "presentation" or "product-system"
    coefficient: type | None = None  # coefficient algebra for product-system nodes


NODES = {
    "toeplitz": AlgebraNode(
        "toeplitz",
        frozenset({"T1", "T2", "T3", "T4", "T5"}),
        frozenset({"T1", "T2", "T3", "T4", "T5"}),
        "presentation",
    ),
    "additive": AlgebraNode(
        "additive",
        frozenset({"T1", "T2", "T3", "T5", "Q6"}),
        frozenset({"T1", "T2", "T3", "T4", "T5", "Q6"}),
        "presentation",
    ),
    "multiplicative": AlgebraNode(
        "multiplicative",
        frozenset({"T1", "T2", "T3", "T4", "Q5"}),
        frozenset({"T1", "T2", "T3", "T4", "T5", "Q5"}),
        "presentation",
    ),
    "full-boundary": AlgebraNode(
        "full-boundary",
        frozenset({"T1", "T2", "Q5", "Q6"}),
        frozenset(RELATIONS),
        "presentation",
    ),
    "nt-toeplitz": AlgebraNode(
        "nt-toeplitz",
        frozenset({"T1", "T2", "T3", "T4", "T5"}),
        frozenset({"T1", "T2", "T3", "T4", "T5"}),
        "product-system",
        ToeplitzElement,
    ),
    "cp-toeplitz": AlgebraNode(
        "cp-toeplitz",
        frozenset({"T1", "T2", "T3", "T4", "Q5"}),
        frozenset({"T1", "T2", "T3", "T4", "T5", "Q5"}),
        "product-system",
        ToeplitzElement,
    ),
    "nt-circle": AlgebraNode(
        "nt-circle",
        frozenset({"T1", "T2", "T3", "T5", "Q6"}),
        frozenset({"T1", "T2", "T3", "T4", "T5", "Q6"}),
        "product-system",
        LaurentPoly,
    ),
    "cp-circle": AlgebraNode(
        "cp-circle",
        frozenset({"T1", "T2", "Q5", "Q6"}),
        frozenset(RELATIONS),
        "product-system",
        LaurentPoly,
    ),
}


@dataclass(frozen=True)
class CoefElem:
    value: object  # ToeplitzElement | LaurentPoly


@dataclass(frozen=True)
class ModElem:
    a: int
    vector: ModuleVector


def _sym(symbol):
    """Generator symbols at presentation nodes: 's' or ('v', p)."""
    return symbol


def _iso_to_product_system(coefficient):
    def fn(symbol):
        if symbol == "s":
            gen = ToeplitzElement.shift(1, 0) if coefficient is ToeplitzElement else (
                LaurentPoly.iota(1)
            )
            return CoefElem(gen)
        _, p = symbol
        return ModElem(p, embed(p, coefficient.one()))

    return fn


def _symbol_morphism(elem):
    if isinstance(elem, CoefElem):
        return CoefElem(symbol_map(elem.value))
    return ModElem(elem.a, symbol_map_vector(elem.vector))


def _identity_edge(elem):
    return elem


EDGES = {
    # quotient maps between presentation nodes: identity on generators
    "q-mult-top": ("toeplitz", "multiplicative", _sym),
    "q-add-top": ("toeplitz", "additive", _sym),
    "q-add-front": ("multiplicative", "full-boundary", _sym),
    "q-mult-bottom": ("additive", "full-boundary", _sym),
    # the four isomorphisms onto product-system algebras
    "iso-top-back": ("toeplitz", "nt-toeplitz", _iso_to_product_system(ToeplitzElement)),
    "iso-top-front": ("multiplicative", "cp-toeplitz", _iso_to_product_system(ToeplitzElement)),
    "iso-bottom-back": ("additive", "nt-circle", _iso_to_product_system(LaurentPoly)),
    "iso-bottom-front": ("full-boundary", "cp-circle", _iso_to_product_system(LaurentPoly)),
    # covariance quotients on the product-system side: identity on generators
    "cp-quotient-toeplitz": ("nt-toeplitz", "cp-toeplitz", _identity_edge),
    "cp-quotient-circle": ("nt-circle", "cp-circle", _identity_edge),
    # the symbol-map morphisms
    "symbol-nt": ("nt-toeplitz", "nt-circle", _symbol_morphism),
    "symbol-cp": ("cp-toeplitz", "cp-circle", _symbol_morphism),
}

FACES = {
    "top": ("toeplitz", ("iso-top-back", "cp-quotient-toeplitz"), ("q-mult-top", "iso-top-front")),
    "bottom": ("additive", ("iso-bottom-back", "cp-quotient-circle"), ("q-mult-bottom", "iso-bottom-front")),
    "back": ("toeplitz", ("iso-top-back", "symbol-nt"), ("q-add-top", "iso-bottom-back")),
    "front": ("multiplicative", ("iso-top-front", "symbol-cp"), ("q-add-front", "iso-bottom-front")),
    "left": ("toeplitz", ("q-add-top", "q-mult-bottom"), ("q-mult-top", "q-add-front")),
    "right": ("nt-toeplitz", ("cp-quotient-toeplitz", "symbol-cp"), ("symbol-nt", "cp-quotient-circle")),
}


def _node_generators(node_name: str, primes: list[int]):
    node = NODES[node_name]
    symbols = ["s"] + [("v", p) for p in primes]
    if node.side == "presentation":
        return symbols
    iso = _iso_to_product_system(node.coefficient)
    return [iso(sym) for sym in symbols]


def _walk(path: tuple[str, ...], start_node: str, elem):
    node = start_node
    for edge_name in path:
        src, dst, fn = EDGES[edge_name]
        if src != node:
            raise ValueError(f"edge {edge_name} does not start at {node}")
        elem = fn(elem)
        node = dst
    return node, elem


def cube_face_check(face: str, primes: list[int]):
    """Both edge paths of the face agree on every generator image.

    Returns (ok, details); each detail row is (generator, image1, image2).
    """
    if face not in FACES:
        raise ValueError(f"unknown face {face!r}; choose from {sorted(FACES)}")
    source, path1, path2 = FACES[face]
    details = []
    ok = True
    for gen in _node_generators(source, primes):
        node1, img1 = _walk(path1, source, gen)
        node2, img2 = _walk(path2, source, gen)
        assert node1 == node2  # faces end at a common corner by construction
        same = img1 == img2
        ok = ok and same
        details.append((gen, img1, img2, same))
    return ok, details


def quotient_monotonicity_check() -> bool:
    """Along every edge, the satisfied relations of the source inject into the target's."""
    for name, (src, dst, _) in EDGES.items():
        if not NODES[src].satisfied <= NODES[dst].satisfied:
            return False
    return True


def node_relation_tables() -> dict:
    return {name: sorted(node.presented) for name, node in NODES.items()}


__all__ = [
    "GROUND",
    "KMS_INFINITY",
    "GROUND_FACTORS_IFF_KMS_LIMIT",
    "dynamics_scale",
    "ExactValue",
    "NotEvaluable",
    "kms_value",
    "projection_expr",
    "prime_projection_sum",
    "factors_through",
    "AlgebraNode",
    "NODES",
    "EDGES",
    "FACES",
    "CoefElem",
    "ModElem",
    "cube_face_check",
    "quotient_monotonicity_check",
    "node_relation_tables",
]
