import random

import pytest

from axb.arithmetic import primes_up_to
from axb.transfer import (
    Compress,
    LaurentPoly,
    ToeplitzElement,
    endo,
    matrix_oracle,
    oracles_agree,
    spanning_elements,
    symbol_map,
    transfer,
)

L = LaurentPoly
T = ToeplitzElement

rng = random.Random(11)


def random_laurent(degree=6):
    out = L.zero()
    for _ in range(3):
        out = out + L.iota(rng.randrange(-degree, degree + 1), rng.randrange(1, 5))
    return out


def random_toeplitz(degree=6):
    out = T.zero()
    for _ in range(3):
        out = out + T.shift(rng.randrange(degree + 1), rng.randrange(degree + 1), rng.randrange(1, 5))
    return out


def test_span_products():
    ss = T.shift(1, 1)
    assert ss * ss == ss
    assert T.shift(0, 1) * T.shift(1, 0) == T.one()
    assert T.shift(1, 2) * T.shift(3, 1) == T.shift(2, 1)


def test_span_product_associative():
    for _ in range(30):
        x, y, z = random_toeplitz(), random_toeplitz(), random_toeplitz()
        assert (x * y) * z == x * (y * z)


def test_endo_examples():
    assert endo(2, L.iota(3)) == L.iota(6)
    assert endo(3, T.shift(1, 2)) == T.shift(3, 6)
    assert endo(5, L.one()) == L.one()
    assert endo(2, endo(3, T.shift(2, 1))) == endo(6, T.shift(2, 1))


def test_endo_multiplicative():
    for a in (2, 3, 5):
        for _ in range(10):
            x, y = random_toeplitz(), random_toeplitz()
            assert endo(a, x * y) == endo(a, x) * endo(a, y)
            f, g = random_laurent(), random_laurent()
            assert endo(a, f * g) == endo(a, f) * endo(a, g)


def test_transfer_polynomials():
    assert transfer(2, L.iota(4)) == L.iota(2)
    assert transfer(2, L.iota(3)) == L.zero()
    assert transfer(9, L.one()) == L.one()
    assert transfer(2, L.iota(-4)) == L.iota(-2)


def test_transfer_span_frozen_values():
    # S^4 (S S*) compresses by 2 to S^2 (S S*)
    assert transfer(2, T.shift(5, 1)) == T.shift(3, 1)
    assert transfer(2, T.shift(3, 0)) == T.zero()
    assert transfer(2, T.shift(3, 1)) == T.shift(2, 1)
    # adjoint side
    assert transfer(2, T.shift(1, 3)) == T.shift(1, 2)
    assert transfer(2, T.shift(0, 0)) == T.one()


def test_transfer_star_preserving():
    for a in (2, 3, 4):
        for _ in range(10):
            x = random_toeplitz()
            assert transfer(a, x.star()) == transfer(a, x).star()


def test_transfer_identity():
    for a in range(1, 13):
        for _ in range(6):
            f, g = random_laurent(), random_laurent()
            assert transfer(a, endo(a, f) * g) == f * transfer(a, g)
            x, y = random_toeplitz(), random_toeplitz()
            assert transfer(a, endo(a, x) * y) == x * transfer(a, y)


def test_transfer_section():
    for a in range(1, 13):
        for _ in range(6):
            x = random_toeplitz()
            assert transfer(a, endo(a, x)) == x


def test_transfer_semigroup_laws():
    for a in range(1, 7):
        for b in range(1, 7):
            f, x = random_laurent(), random_toeplitz()
            assert transfer(b, transfer(a, f)) == transfer(a * b, f)
            assert transfer(b, transfer(a, x)) == transfer(a * b, x)


def test_polynomial_transfer_commutes_with_coprime_endo():
    for p in primes_up_to(11):
        for r in primes_up_to(11):
            if p == r:
                continue
            for _ in range(3):
                f = random_laurent()
                assert transfer(p, endo(r, f)) == endo(r, transfer(p, f))


def test_span_transfer_noncommutation_witness():
    ss = T.shift(1, 1)
    assert transfer(2, endo(3, ss)) == T.shift(2, 2)
    assert endo(3, transfer(2, ss)) == T.shift(3, 3)
    assert transfer(2, endo(3, ss)) != endo(3, transfer(2, ss))


def test_transfer_positive_on_projections():
    for a in (2, 3, 5):
        for n in range(8):
            image = transfer(a, T.shift(n, n))
            assert image == T.shift(-(-n // a), -(-n // a))


def test_almost_faithful():
    for a in (2, 3, 4):
        for x in spanning_elements(8):
            if x.is_zero:
                continue
            found = False
            for n in range(6):
                y = T.shift(0, (a - 1) * n)
                prod = x * y
                if not transfer(a, prod.star() * prod).is_zero:
                    found = True
                    break
            assert found, x


def test_symbol_map():
    assert symbol_map(T.shift(2, 1)) == L.iota(1)
    assert symbol_map(T.one()) == L.one()
    # compression then symbol equals symbol then transfer, landing on i^2
    x = T.shift(5, 1)
    assert symbol_map(transfer(2, x)) == transfer(2, symbol_map(x)) == L.iota(2)
    for _ in range(20):
        x, y = random_toeplitz(), random_toeplitz()
        assert symbol_map(x * y) == symbol_map(x) * symbol_map(y)
        assert symbol_map(x.star()) == symbol_map(x).star()


def test_symbol_intertwines():
    for a in range(1, 13):
        for x in spanning_elements(5):
            assert symbol_map(endo(a, x)) == endo(a, symbol_map(x))
            assert symbol_map(transfer(a, x)) == transfer(a, symbol_map(x))


def test_oracle_identity():
    o = matrix_oracle(T.one(), 8)
    for i in range(8):
        for j in range(8):
            assert o.entry(i, j) == (1 if i == j else 0)


def test_oracle_matches_transfer():
    size = 24
    for a in (2, 3, 5):
        for elem in spanning_elements(5):
            assert oracles_agree(
                matrix_oracle(transfer(a, elem), size),
                matrix_oracle(Compress(a, elem), size),
            )


def test_oracle_frozen_example():
    # the compression of S^4 (S S*) by 2 matches S^2 (S S*) off the clipped columns
    assert oracles_agree(
        matrix_oracle(Compress(2, T.shift(5, 1)), 20),
        matrix_oracle(T.shift(3, 1), 20),
    )


def test_oracle_clipping():
    o = matrix_oracle(Compress(2, T.shift(1, 0)), 10)
    assert 5 in o.clipped  # 2*5 = 10 leaves the window
    assert 4 not in o.clipped


def test_oracle_nested():
    size = 32
    for a, b in [(2, 3), (3, 2)]:
        for elem in spanning_elements(4):
            assert oracles_agree(
                matrix_oracle(Compress(b, Compress(a, elem)), size),
                matrix_oracle(transfer(a * b, elem), size),
            )


def test_rejects_bad_levels():
    with pytest.raises(ValueError):
        transfer(0, L.one())
    with pytest.raises(ValueError):
        endo(0, T.one())
    with pytest.raises(ValueError):
        T.shift(-1, 0)
