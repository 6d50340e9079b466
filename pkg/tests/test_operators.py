import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axb.operators import (
    BilateralBackend,
    OperatorExpr,
    ToeplitzBackend,
    additive_presentation_names,
    adjoint_word,
    apply,
    defect_decomposition,
    defect_terms_expr,
    faithfulness_witness,
    generator_word,
    nica_product_check,
    normalize,
    relation_instances,
    s_word,
    toeplitz_presentation_names,
    unit_defect_expr,
    v_word,
    verify_relations,
    word_sum,
)
from axb.semigroup import SemigroupElement as Sg

T = ToeplitzBackend()
B = BilateralBackend()

sg_small = st.builds(Sg, st.integers(0, 8), st.integers(1, 12))


def test_normalize_commutes_distinct_primes():
    # v_p* v_q becomes v_q v_p*
    assert normalize(adjoint_word(v_word(2)) + v_word(3)) == OperatorExpr.monomial(
        Sg(0, 3), Sg(0, 2)
    )


def test_normalize_adjoint_shift_past_isometry():
    # s* v_p becomes s^(p-1) v_p s*
    assert normalize(adjoint_word(s_word()) + v_word(5)) == OperatorExpr.monomial(
        Sg(4, 5), Sg(1, 1)
    )


def test_normalize_kills_offset_compressions():
    for p in (2, 3, 5):
        for k in range(1, p):
            assert normalize(adjoint_word(v_word(p)) + s_word(k) + v_word(p)).is_zero


def test_normalize_idempotent():
    expr = normalize(adjoint_word(s_word()) + v_word(3) + s_word(2))
    assert normalize(expr) == expr


def test_monomial_products_stay_monomial():
    words = [s_word(2), v_word(3), adjoint_word(v_word(2)), adjoint_word(s_word())]
    for w1 in words:
        for w2 in words:
            expr = normalize(w1 + w2)
            assert len(expr.terms) <= 1


@settings(max_examples=150)
@given(sg_small, sg_small)
def test_generator_word_is_homomorphism(x, y):
    assert normalize(generator_word(x) + generator_word(y)) == normalize(generator_word(x * y))


def test_apply_examples():
    assert apply(T, s_word(), (2, 3)) == {(3, 3): Fraction(1)}
    assert apply(B, v_word(2), (3, 1)) == {(6, 2): Fraction(1)}
    assert apply(B, adjoint_word(s_word()), (0, 1)) == {(-1, 1): Fraction(1)}
    assert apply(T, adjoint_word(s_word()), (0, 1)) == {}


def test_apply_word_sums_cancel():
    ws = word_sum((1, ()), (-1, s_word() + adjoint_word(s_word())))
    assert apply(T, ws, (0, 1)) == {(0, 1): Fraction(1)}
    assert apply(T, ws, (3, 1)) == {}


def test_toeplitz_satisfies_presentation():
    report = verify_relations(T, toeplitz_presentation_names(), [2, 3, 5, 7], window=T.window(12, 10))
    assert report.ok, report.failures[:3]


def test_toeplitz_fails_unit_extension():
    report = verify_relations(T, ["Q6"], [], window=T.window(4, 4))
    assert not report.ok


def test_bilateral_satisfies_additive_presentation():
    report = verify_relations(B, additive_presentation_names(), [2, 3, 5, 7], window=B.window(8, 10))
    assert report.ok, report.failures[:3]


def test_bilateral_fails_partition_relation_at_origin():
    report = verify_relations(B, ["Q5"], [2, 3, 5], window=B.window(4, 6))
    assert not report.ok
    assert any(f[1] == (0, 1) for f in report.failures)


def test_generator_actions_injective_on_window():
    for backend, window in ((T, T.window(10, 10)), (B, B.window(6, 8))):
        for gen in [Sg(1, 1), Sg(0, 2), Sg(0, 3)]:
            images = [backend.act(gen, idx) for idx in window]
            assert len(set(images)) == len(images)


def test_faithfulness_witnesses():
    assert faithfulness_witness(T, [2, 3], include_unit_defect=True) == (0, 1)
    assert faithfulness_witness(T, [], include_unit_defect=True) == (0, 1)
    assert faithfulness_witness(B, [2, 3, 5], include_unit_defect=False) == (0, 1)
    # the bilateral unit defect vanishes, so no witness exists
    assert faithfulness_witness(B, [2], include_unit_defect=True, window=B.window(8, 8)) is None


def test_defect_decomposition_shapes():
    assert defect_decomposition(1) == []
    d5 = defect_decomposition(5)
    assert len(d5) == 1 and d5[0].conjugator == () and d5[0].prime == 5
    d4 = defect_decomposition(4)
    assert [t.prime for t in d4] == [2, 2, 2]
    assert d4[0].conjugator == generator_word(Sg(0, 2))
    assert d4[1].conjugator == generator_word(Sg(1, 2))
    assert d4[2].conjugator == ()


def test_defect_decomposition_rejects_zero():
    with pytest.raises(ValueError):
        defect_decomposition(0)


@pytest.mark.parametrize("a", [2, 3, 4, 6, 8, 12])
def test_defect_decomposition_identity(a):
    lhs = unit_defect_expr(a)
    rhs = defect_terms_expr(defect_decomposition(a))
    assert lhs == rhs
    window = T.window(2 * a, a + 1)
    assert all(apply(T, lhs, idx) == apply(T, rhs, idx) for idx in window)


def test_nica_products():
    assert nica_product_check(T, Sg(0, 2), Sg(1, 2), window=T.window(10, 8))
    assert nica_product_check(T, Sg(1, 2), Sg(0, 3), window=T.window(14, 10))
    assert nica_product_check(T, Sg(1, 2), Sg(1, 2), window=T.window(10, 8))
    assert nica_product_check(B, Sg(0, 2), Sg(1, 2), window=B.window(8, 8))


def test_normalize_sound_on_random_words():
    rng = random.Random(7)
    letters = [(Sg(1, 1), False), (Sg(1, 1), True)]
    for p in (2, 3, 5, 7):
        letters += [(Sg(0, p), False), (Sg(0, p), True)]
    for _ in range(60):
        word = tuple(rng.choice(letters) for _ in range(rng.randrange(1, 10)))
        expr = normalize(word)
        for idx in T.window(8, 8):
            assert apply(T, word, idx) == apply(T, expr, idx)
        for idx in B.window(5, 6):
            assert apply(B, word, idx) == apply(B, expr, idx)


def test_relation_instances_unknown():
    with pytest.raises(ValueError):
        relation_instances("T9", [2])


def test_expr_algebra():
    one = OperatorExpr.one()
    ss = OperatorExpr.monomial(Sg(1, 1), Sg(1, 1))
    expr = one - ss
    assert expr + ss == one
    assert expr.scaled(0).is_zero
    assert (expr * expr) == expr  # defect projections are idempotent
    assert expr.adjoint() == expr
