import random

import pytest

from axb.modules import (
    ModuleOperator,
    ModuleVector,
    absorb_adjoint_check,
    absorb_projection_check,
    basis_vector,
    embed,
    extend_to_multiple,
    inner,
    iterated_transfer_collapse_check,
    left_action,
    module_mult,
    nica_pair,
    rank_one,
    representative,
    symbol_map_operator,
    symbol_map_vector,
    unit_rank_one,
)
from axb.transfer import LaurentPoly, ToeplitzElement, endo, symbol_map, transfer

L = LaurentPoly
T = ToeplitzElement

rng = random.Random(23)


def rand_l(degree=5):
    out = L.zero()
    for _ in range(3):
        out = out + L.iota(rng.randrange(-degree, degree + 1), rng.randrange(1, 4))
    return out


def rand_t(degree=5):
    out = T.zero()
    for _ in range(3):
        out = out + T.shift(rng.randrange(degree + 1), rng.randrange(degree + 1), rng.randrange(1, 4))
    return out


def gen(kind, k):
    return L.iota(k) if kind is L else T.shift(k, 0)


def test_embed_examples():
    assert embed(2, L.iota(3)).coords == (L.zero(), L.iota(1))
    assert embed(3, L.one()).coords == (L.one(), L.zero(), L.zero())
    assert embed(2, T.shift(0, 1)) == embed(2, T.shift(1, 2))


def test_embed_linear():
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for a in (2, 3, 5):
            x, y = rand(), rand()
            assert embed(a, x + y) == embed(a, x) + embed(a, y)


@pytest.mark.parametrize("kind", [L, T])
@pytest.mark.parametrize("a", [1, 2, 3, 4, 6, 8])
def test_orthonormal_basis(kind, a):
    basis = [embed(a, gen(kind, k)) for k in range(a)]
    for j in range(a):
        for k in range(a):
            expected = kind.one() if j == k else kind.zero()
            assert inner(basis[j], basis[k]) == expected


def test_inner_examples():
    assert inner(embed(2, L.iota(1)), embed(2, L.iota(1))) == L.one()
    assert inner(embed(2, L.one()), embed(2, L.iota(1))) == L.zero()
    for a in (2, 3, 5):
        for j in range(a):
            for k in range(a):
                expected = T.one() if j == k else T.zero()
                assert inner(embed(a, T.shift(j, 0)), embed(a, T.shift(k, 0))) == expected


def test_inner_dimension_mismatch():
    with pytest.raises(ValueError):
        inner(embed(2, L.one()), embed(3, L.one()))


def test_reconstruction():
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for a in (2, 3, 5, 8):
            v = embed(a, rand())
            assert embed(a, representative(v)) == v
            rebuilt = ModuleVector(a, tuple(kind.zero() for _ in range(a)))
            for k in range(a):
                rebuilt = rebuilt + basis_vector(a, k, kind).right_mul(v.coords[k])
            assert rebuilt == v


def test_embed_surjective_on_coordinates():
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for a in (2, 3, 4):
            coords = tuple(rand() for _ in range(a))
            v = ModuleVector(a, coords)
            assert embed(a, representative(v)) == v


def test_module_mult_examples():
    assert module_mult(embed(2, L.one()), embed(3, L.one())) == embed(6, L.one())
    assert module_mult(embed(2, L.iota(1)), embed(3, L.one())) == embed(6, L.iota(1))
    g = L.iota(2)
    assert module_mult(embed(2, L.iota(1)), embed(1, g)) == embed(2, L.iota(1) * endo(2, g))


def test_module_mult_on_embeds():
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for a, b in ((2, 3), (3, 2), (2, 2)):
            f, g = rand(), rand()
            assert module_mult(embed(a, f), embed(b, g)) == embed(a * b, f * endo(a, g))


def test_module_mult_associative():
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for _ in range(6):
            u = embed(2, rand())
            v = embed(3, rand())
            w = embed(2, rand())
            assert module_mult(module_mult(u, v), w) == module_mult(u, module_mult(v, w))


def test_basis_products_are_basis():
    for kind in (L, T):
        for a, b in ((2, 3), (3, 5)):
            for j in range(a):
                for k in range(b):
                    prod = module_mult(embed(a, gen(kind, j)), embed(b, gen(kind, k)))
                    assert prod == basis_vector(a * b, j + a * k, kind)


def test_rank_one_identity_sum():
    for kind in (L, T):
        for a in (2, 3, 7):
            total = ModuleOperator.zero(a, kind)
            for k in range(a):
                bk = embed(a, gen(kind, k))
                total = total + rank_one(bk, bk)
            assert total == ModuleOperator.identity(a, kind)


def test_rank_one_action():
    theta = rank_one(embed(2, L.one()), embed(2, L.one()))
    assert theta(embed(2, L.iota(1))).is_zero
    for kind, rand in ((L, rand_l), (T, rand_t)):
        m, n, v = embed(3, rand()), embed(3, rand()), embed(3, rand())
        assert rank_one(m, n)(v) == m.right_mul(inner(n, v))


def test_left_action():
    assert left_action(2, T.shift(1, 0))(embed(2, T.one())) == embed(2, T.shift(1, 0))
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for a in (2, 3, 4):
            t, x = rand(), rand()
            assert left_action(a, t)(embed(a, x)) == embed(a, t * x)
            assert left_action(a, kind.one()) == ModuleOperator.identity(a, kind)


def test_left_action_is_rank_one_sum():
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for a in (2, 3, 5):
            t = rand()
            total = ModuleOperator.zero(a, kind)
            for k in range(a):
                total = total + rank_one(embed(a, t * gen(kind, k)), embed(a, gen(kind, k)))
            assert total == left_action(a, t)


def test_extension_characterisation():
    for kind, rand in ((L, rand_l), (T, rand_t)):
        a, b = 2, 3
        r = rank_one(embed(a, rand()), embed(a, rand()))
        ext = extend_to_multiple(r, a * b)
        for _ in range(5):
            v = embed(a, rand())
            w = embed(b, rand())
            assert ext(module_mult(v, w)) == module_mult(r(v), w)
        assert extend_to_multiple(ModuleOperator.identity(a, kind), a * b) == ModuleOperator.identity(a * b, kind)


def test_extension_rejects_non_multiple():
    with pytest.raises(ValueError):
        extend_to_multiple(ModuleOperator.identity(2, L), 3)


@pytest.mark.parametrize("kind", [L, T])
@pytest.mark.parametrize("pair", [(2, 3), (2, 5), (3, 5)])
def test_nica_pair(kind, pair):
    p, r = pair
    assert nica_pair(p, r, kind) == unit_rank_one(p * r, kind)


def test_nica_pair_action_on_embeds():
    # the paired extension acts on q_pr(f) as f -> endo_pr(transfer_pr(f))
    for kind, rand in ((L, rand_l), (T, rand_t)):
        for p, r in [(2, 3), (3, 5)]:
            op = nica_pair(p, r, kind)
            for _ in range(4):
                f = rand()
                lhs = op(embed(p * r, f))
                rhs = embed(p * r, endo(p * r, transfer(p * r, f)))
                assert lhs == rhs


def test_absorb_projection():
    for a in (1, 2, 3, 4):
        for n in range(8):
            for j in range(8):
                assert absorb_projection_check(a, n, j)


def test_absorb_adjoint():
    assert absorb_adjoint_check(2, 1, 1)
    assert absorb_adjoint_check(3, 1, 2)
    assert absorb_adjoint_check(3, 4, 2)
    with pytest.raises(ValueError):
        absorb_adjoint_check(2, 1, 2)  # 1 and 3 straddle a block boundary


def test_iterated_transfer_collapse():
    ss = T.shift(1, 1)
    # the collapsed arguments differ in the algebra...
    assert endo(2, transfer(2, endo(3, transfer(3, ss)))) != endo(6, transfer(6, ss))
    # ...but agree in the module
    assert iterated_transfer_collapse_check(2, 3, ss)
    for p, r in [(2, 3), (2, 5), (3, 5)]:
        for m in range(5):
            for n in range(5):
                assert iterated_transfer_collapse_check(p, r, T.shift(m, n))


def test_presentation_moves_in_the_module_picture():
    # the intertwining move: q_p(1) . gen = q_p(gen^p)
    for kind in (L, T):
        for p in (2, 3, 5):
            one = embed(p, kind.one())
            assert one.right_mul(gen(kind, 1)) == embed(p, gen(kind, p))
    # the adjoint move (span system): q_p(S*) = q_p(S^(p-1)) . S*
    for p in (2, 3, 5, 7):
        lhs = embed(p, T.shift(0, 1))
        rhs = embed(p, T.shift(p - 1, 0)).right_mul(T.shift(0, 1))
        assert lhs == rhs
    # the annihilation move: <q_p(1), q_p(gen^k)> = 0 for 0 < k < p
    for kind in (L, T):
        for p in (2, 3, 5):
            one = embed(p, kind.one())
            for k in range(1, p):
                assert inner(one, embed(p, gen(kind, k))) == kind.zero()


def test_symbol_morphism_vectors():
    assert symbol_map_vector(embed(2, T.shift(1, 0))) == embed(2, L.iota(1))
    for a in (2, 3, 4):
        for _ in range(5):
            x = rand_t()
            assert symbol_map_vector(embed(a, x)) == embed(a, symbol_map(x))


def test_symbol_morphism_multiplicative_and_isometric():
    for a, b in ((2, 3), (3, 2), (2, 2), (5, 6)):
        x, y = embed(a, rand_t()), embed(b, rand_t())
        assert symbol_map_vector(module_mult(x, y)) == module_mult(
            symbol_map_vector(x), symbol_map_vector(y)
        )
    for a in (2, 3, 6):
        v, w = embed(a, rand_t()), embed(a, rand_t())
        assert inner(symbol_map_vector(v), symbol_map_vector(w)) == symbol_map(inner(v, w))


def test_symbol_morphism_operators():
    for a in (2, 3, 4):
        t = rand_t()
        assert symbol_map_operator(left_action(a, t)) == left_action(a, symbol_map(t))
