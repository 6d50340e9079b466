from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axb.arithmetic import INF, ProfiniteResidue, Supernatural
from axb.operators import OperatorExpr, normalize
from axb.parsing import (
    ParseError,
    format_point,
    format_word_sum,
    parse_group_element,
    parse_laurent,
    parse_point,
    parse_semigroup_element,
    parse_supernatural,
    parse_toeplitz,
    parse_word_expr,
)
from axb.semigroup import SemigroupElement as Sg
from axb.spectrum import PointA, PointB
from axb.transfer import LaurentPoly, ToeplitzElement


def test_word_example():
    (coeff, word), = parse_word_expr("s^2 v_3 v_3* s*^2")
    assert coeff == 1
    assert word == (
        (Sg(1, 1), False),
        (Sg(1, 1), False),
        (Sg(0, 3), False),
        (Sg(0, 3), True),
        (Sg(1, 1), True),
        (Sg(1, 1), True),
    )


def test_defect_example():
    expr = normalize(parse_word_expr("1 - s s*"))
    assert expr == OperatorExpr.one() - OperatorExpr.monomial(Sg(1, 1), Sg(1, 1))


def test_scalars_and_w_atoms():
    ws = parse_word_expr("2/3 w(1,4)")
    assert ws[0] == (Fraction(2, 3), ((Sg(1, 4), False),))
    assert parse_word_expr("v3 v_3") == parse_word_expr("v_3^2")


def test_parenthesised_adjoint():
    assert normalize(parse_word_expr("(s v2)*^2")) == normalize(parse_word_expr("v2* s* v2* s*"))


def test_explicit_multiplication():
    assert parse_word_expr("s * v2") == parse_word_expr("s v2")


def test_word_errors():
    for bad in ["s^2 @", "v4", "", "s +", "w(1,)"]:
        with pytest.raises(ParseError):
            parse_word_expr(bad)


def test_round_trip_examples():
    for text in ["s^2 v_3 v_3* s*^2", "1 - s s*", "2/3 w(1,4) + v2 s*", "s* v5 - 1/2"]:
        ws = parse_word_expr(text)
        assert parse_word_expr(format_word_sum(ws)) == ws


letters = st.sampled_from(
    [(Sg(1, 1), False), (Sg(1, 1), True)]
    + [(Sg(0, p), s) for p in (2, 3, 5, 7) for s in (False, True)]
    + [(Sg(m, a), s) for m, a in ((2, 6), (0, 4)) for s in (False, True)]
)
words = st.tuples(st.lists(letters, max_size=6).map(tuple))
coeffs = st.fractions(min_value=Fraction(-5), max_value=5, max_denominator=6).filter(lambda c: c != 0)


@settings(max_examples=150)
@given(st.lists(st.tuples(coeffs, st.lists(letters, max_size=5).map(tuple)), min_size=1, max_size=4))
def test_round_trip_random(terms):
    from axb.operators import word_sum

    ws = word_sum(*terms)
    assert parse_word_expr(format_word_sum(ws)) == ws


def test_supernatural_syntax():
    assert parse_supernatural("12") == Supernatural.from_int(12)
    assert parse_supernatural("nabla").is_nabla
    sn = parse_supernatural("2^inf*3^2")
    assert sn.exponent(2) == INF and sn.exponent(3) == 2 and sn.exponent(5) == 0
    assert parse_supernatural(str(sn)) == sn
    assert parse_supernatural("2*2*3") == Supernatural.from_int(12)
    for bad in ["", "10x", "4^2", "2^-1", "2^"]:
        with pytest.raises(ParseError):
            parse_supernatural(bad)


def test_point_syntax():
    assert parse_point("A(7;12)") == PointA(7, 12)
    q = parse_point("B(7;12)")
    assert q == PointB(ProfiniteResidue.from_integer(7, 12), 12)
    assert parse_point("B(4:3,3:1;12)") == q
    assert parse_point("B(5;nabla)").N.is_nabla
    assert parse_point("A(0;2^inf*3)") == PointA(0, Supernatural(0, {2: INF, 3: 1}))
    for point in [PointA(7, 12), q, PointA(3, Supernatural.nabla())]:
        assert parse_point(format_point(point)) == point
    for bad in ["A(7,12)", "C(1;2)", "B(x;12)", "A(-1;12)", "B(9:1;12)"]:
        with pytest.raises(ParseError):
            parse_point(bad)


def test_element_syntax():
    g = parse_group_element("(1/2,3)")
    assert g.r == Fraction(1, 2) and g.a == 3
    assert parse_semigroup_element("(3,4)") == Sg(3, 4)
    with pytest.raises(ParseError):
        parse_semigroup_element("(1/2,3)")
    with pytest.raises(ParseError):
        parse_group_element("(1,0)")


def test_laurent_syntax():
    f = parse_laurent("i^4 - 2/3 i^-1 + 5")
    assert f == LaurentPoly({4: Fraction(1), -1: Fraction(-2, 3), 0: Fraction(5)})
    assert parse_laurent("i") == LaurentPoly.iota(1)
    with pytest.raises(ParseError):
        parse_laurent("i^")


def test_toeplitz_syntax():
    t = parse_toeplitz("S^3 S*^1 - 2 S*^2 + 1")
    assert t == ToeplitzElement({(3, 1): Fraction(1), (0, 2): Fraction(-2), (0, 0): Fraction(1)})
    assert parse_toeplitz("S") == ToeplitzElement.shift(1, 0)
    assert parse_toeplitz("S S*") == ToeplitzElement.shift(1, 1)
    with pytest.raises(ParseError):
        parse_toeplitz("S^2 S^3")


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_word_expr("s v3 $")
    assert "position" in str(info.value)
