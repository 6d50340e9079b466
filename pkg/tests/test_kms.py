from fractions import Fraction

import pytest

from axb.kms import (
    FACES,
    GROUND,
    GROUND_FACTORS_IFF_KMS_LIMIT,
    KMS_INFINITY,
    NODES,
    ExactValue,
    NotEvaluable,
    cube_face_check,
    dynamics_scale,
    factors_through,
    kms_value,
    prime_projection_sum,
    projection_expr,
    quotient_monotonicity_check,
)
from axb.operators import OperatorExpr, adjoint_word, normalize, s_word, v_word
from axb.semigroup import SemigroupElement as Sg


def test_dynamics_scale():
    assert dynamics_scale((Sg(1, 1), Sg(0, 1))) == 1
    assert dynamics_scale((Sg(0, 2), Sg(0, 3))) == Fraction(2, 3)
    assert dynamics_scale((Sg(0, 6), Sg(0, 1))) == 6
    assert dynamics_scale((Sg(3, 4), Sg(3, 4))) == 1


def test_exact_value_canonicalisation():
    assert ExactValue.power(4, Fraction(1, 2)) == 2
    assert ExactValue.power(8, Fraction(2, 3)) == 4
    assert ExactValue.power(1, Fraction(7, 3)) == 1
    # sqrt(8) = 2 sqrt(2)
    assert ExactValue.power(8, Fraction(1, 2)) == ExactValue.power(2, Fraction(1, 2)).scaled(2)
    # 9^(1/4) = 3^(1/2)
    assert ExactValue.power(9, Fraction(1, 4)) == ExactValue.power(3, Fraction(1, 2))
    combo = ExactValue.power(2, Fraction(1, 2)) + ExactValue.power(8, Fraction(1, 2)).scaled(Fraction(-1, 2))
    assert combo == 0
    assert ExactValue.power(6, Fraction(-1, 2)).approx() == pytest.approx(6 ** -0.5)


def test_kms_projection_values():
    expr = normalize(s_word(1) + v_word(3) + adjoint_word(s_word(1) + v_word(3)))
    assert kms_value(2, expr) == Fraction(1, 9)
    assert kms_value(Fraction(3, 2), OperatorExpr.one()) == 1
    for p in (2, 3, 5, 7):
        assert kms_value(2, prime_projection_sum(p)) == Fraction(1, p)
        assert kms_value(Fraction(3, 2), projection_expr(1, p)) == ExactValue.power(p, Fraction(-3, 2))
        assert kms_value(Fraction(3, 2), prime_projection_sum(p)) == ExactValue.power(p, Fraction(-1, 2))


def test_kms_composite_extension():
    assert kms_value(2, projection_expr(3, 6)) == Fraction(1, 36)
    assert kms_value(1, projection_expr(0, 12)) == Fraction(1, 12)


def test_ground_and_limit_values():
    for p in (2, 3, 97):
        for k in (0, 1, p - 1):
            assert kms_value(GROUND, projection_expr(k, p)) == 0
            assert kms_value(KMS_INFINITY, projection_expr(k, p)) == 0
    assert kms_value(GROUND, OperatorExpr.one()) == 1
    with pytest.raises(NotEvaluable):
        kms_value(GROUND, projection_expr(2, 1))
    assert kms_value(2, projection_expr(2, 1)) == 1  # finite temperature fixes these


def test_kms_rejects():
    with pytest.raises(NotEvaluable):
        kms_value(2, OperatorExpr.monomial(Sg(0, 2), Sg(0, 3)))
    with pytest.raises(NotEvaluable):
        kms_value(2, OperatorExpr.one().scaled(-1))
    with pytest.raises(ValueError):
        kms_value(Fraction(1, 2), OperatorExpr.one())


def test_factoring_predicates():
    assert factors_through(1, "multiplicative") is True
    assert factors_through(2, "multiplicative") is False
    assert factors_through(Fraction(11, 10), "multiplicative") is False
    assert factors_through(5, "additive") is True
    assert factors_through(KMS_INFINITY, "additive") is True
    assert factors_through(KMS_INFINITY, "multiplicative") is False
    assert factors_through(GROUND, "multiplicative") is False
    assert factors_through(GROUND, "additive") == GROUND_FACTORS_IFF_KMS_LIMIT
    with pytest.raises(ValueError):
        factors_through(2, "sideways")


def test_phase_transition_grid():
    grid = [Fraction(k, 10) for k in range(10, 101)]
    hits = [b for b in grid if factors_through(b, "multiplicative", prime_bound=50)]
    assert hits == [Fraction(1)]


def test_cube_faces():
    for face in FACES:
        ok, details = cube_face_check(face, [2, 3, 5, 7, 11, 13])
        assert ok, (face, [d for d in details if not d[3]])


def test_cube_rejects_unknown_face():
    with pytest.raises(ValueError):
        cube_face_check("diagonal", [2])


def test_relation_tables():
    assert quotient_monotonicity_check()
    assert NODES["toeplitz"].presented == frozenset({"T1", "T2", "T3", "T4", "T5"})
    assert NODES["additive"].presented == frozenset({"T1", "T2", "T3", "T5", "Q6"})
    assert NODES["multiplicative"].presented == frozenset({"T1", "T2", "T3", "T4", "Q5"})
    assert NODES["full-boundary"].presented == frozenset({"T1", "T2", "Q5", "Q6"})
    # presentation relations of each node hold among its satisfied ones
    for node in NODES.values():
        assert node.presented <= node.satisfied
