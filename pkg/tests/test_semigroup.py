from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axb.semigroup import GroupElement, SemigroupElement, leq, left_quotient, lub
from axb.suites import brute_lub

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_rationals = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)


def g(r, a):
    return GroupElement(Fraction(r), Fraction(a))


def test_group_law_examples():
    assert g(1, 2) * g(3, 5) == g(7, 10)
    assert g(1, 2).inverse() == g(Fraction(-1, 2), Fraction(1, 2))
    e = GroupElement.identity()
    assert e * g(5, 7) == g(5, 7)
    assert g(5, 7) * e == g(5, 7)


@given(rationals, positive_rationals, rationals, positive_rationals, rationals, positive_rationals)
def test_associativity(r1, a1, r2, a2, r3, a3):
    x, y, z = g(r1, a1), g(r2, a2), g(r3, a3)
    assert (x * y) * z == x * (y * z)


@given(rationals, positive_rationals)
def test_inverse(r, a):
    x = g(r, a)
    assert x * x.inverse() == GroupElement.identity()
    assert x.inverse() * x == GroupElement.identity()


def test_positive_cone_rejects():
    with pytest.raises(ValueError):
        GroupElement(1, -2)
    with pytest.raises(ValueError):
        SemigroupElement(-1, 2)
    with pytest.raises(ValueError):
        SemigroupElement(0, 0)


def test_leq_examples():
    assert leq(g(1, 2), g(3, 4))
    assert not leq(g(0, 2), g(1, 2))
    x = SemigroupElement(3, 4)
    assert leq(x, x)


def test_leq_on_semigroup_matches_group_route():
    els = [SemigroupElement(m, a) for m in range(8) for a in range(1, 8)]
    for x in els:
        for y in els:
            assert leq(x, y) == (x.to_group().inverse() * y.to_group()).in_positive_cone()


def test_leq_partial_order_on_cone():
    els = [SemigroupElement(m, a) for m in range(6) for a in range(1, 6)]
    for x in els:
        assert leq(x, x)
    for x in els:
        for y in els:
            if leq(x, y) and leq(y, x):
                assert x == y
            for z in els:
                if leq(x, y) and leq(y, z):
                    assert leq(x, z)


def test_lub_examples():
    assert lub(SemigroupElement(1, 2), SemigroupElement(0, 3)) == SemigroupElement(3, 6)
    assert lub(SemigroupElement(0, 2), SemigroupElement(1, 2)) is None
    x = SemigroupElement(5, 4)
    assert lub(x, x) == x
    # the additive part must dominate both inputs
    assert lub(SemigroupElement(5, 2), SemigroupElement(0, 3)) == SemigroupElement(9, 6)


def test_left_quotient():
    x, y = SemigroupElement(1, 2), SemigroupElement(3, 6)
    assert x * left_quotient(x, y) == y
    with pytest.raises(ValueError):
        left_quotient(SemigroupElement(0, 2), SemigroupElement(1, 2))


@settings(max_examples=300)
@given(st.integers(0, 12), st.integers(1, 12), st.integers(0, 12), st.integers(1, 12))
def test_lub_matches_brute_force(m, a, n, b):
    x, y = SemigroupElement(m, a), SemigroupElement(n, b)
    assert lub(x, y) == brute_lub(x, y)


@given(st.integers(0, 20), st.integers(1, 20), st.integers(0, 20), st.integers(1, 20))
def test_lub_is_an_upper_bound(m, a, n, b):
    x, y = SemigroupElement(m, a), SemigroupElement(n, b)
    z = lub(x, y)
    if z is not None:
        assert leq(x, z) and leq(y, z)
        assert lub(y, x) == z
