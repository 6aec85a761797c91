import itertools

import numpy as np
import pytest

from prmqec.errors import (
    DegreeTooSmall,
    NonPrimeP,
    ReducibleModulus,
    ZeroInverse,
)
from prmqec.gf import (
    factor_prime_power,
    field_for_order,
    field_make,
    find_rootless_monic,
    poly_eval,
    poly_is_irreducible,
    power_sum,
    subfield_context,
)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81]


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_for_order(q)
    t = F.tables
    a = np.arange(q, dtype=np.uint8)
    # commutativity and identities
    assert np.array_equal(t.add, t.add.T)
    assert np.array_equal(t.mul, t.mul.T)
    assert np.array_equal(t.add[0], a)
    assert np.array_equal(t.mul[1], a)
    assert not t.mul[0].any()
    # associativity and distributivity, fully vectorized over all triples
    assert np.array_equal(t.add[t.add[:, :, None], a[None, None, :]],
                          t.add[a[:, None, None], t.add[None, :, :]])
    assert np.array_equal(t.mul[t.mul[:, :, None], a[None, None, :]],
                          t.mul[a[:, None, None], t.mul[None, :, :]])
    assert np.array_equal(t.mul[a[:, None, None], t.add[None, :, :]],
                          t.add[t.mul[:, :, None], t.mul[:, None, :]])
    # inverses
    assert np.array_equal(t.add[a, t.neg], np.zeros(q, dtype=np.uint8))
    nz = a[1:]
    assert np.array_equal(t.mul[nz, t.inv[1:]], np.ones(q - 1, dtype=np.uint8))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_generator_order(q):
    F = field_for_order(q)
    g = F.tables.generator
    seen = set()
    acc = 1
    for _ in range(q - 1):
        seen.add(acc)
        acc = F.mul_codes(acc, g)
    assert len(seen) == q - 1 and acc == 1


def test_factor_prime_power():
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(81) == (3, 4)
    with pytest.raises(NonPrimeP):
        factor_prime_power(6)
    with pytest.raises(NonPrimeP):
        field_make(4, 2)


def test_modulus_validation():
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, (0, 0, 1))  # x^2 is reducible
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, (1, 1))     # wrong degree
    F = field_make(2, 3, (1, 1, 0, 1))  # a valid non-default modulus
    assert F.modulus == (1, 1, 0, 1)


def test_default_modulus_is_least_primitive():
    # constant-first ordering: (1,0,1,1) = x^3 + x^2 + 1 precedes
    # (1,1,0,1) = x^3 + x + 1
    assert field_make(2, 3).modulus == (1, 0, 1, 1)
    # the default GF(4) modulus is x^2 + x + 1 (the only irreducible one)
    assert field_make(2, 2).modulus == (1, 1, 1)


def test_zero_inverse():
    F = field_for_order(5)
    with pytest.raises(ZeroInverse):
        F.inv_code(0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_power_sum_against_brute_force(q):
    F = field_for_order(q)
    for gamma in range(2 * q):
        acc = F.zero
        for z in F.elements():
            acc = acc + z ** gamma if not (z.code == 0 and gamma == 0) \
                else acc + F.one
        assert power_sum(F, gamma) == acc, (q, gamma)


@pytest.mark.parametrize("q,deg", [(2, 2), (2, 5), (3, 3), (4, 2), (8, 2),
                                   (9, 2), (5, 4)])
def test_find_rootless_monic(q, deg):
    F = field_for_order(q)
    f = find_rootless_monic(F, deg)
    assert len(f) == deg + 1 and f[-1] == 1
    assert poly_is_irreducible(F, f)
    for z in range(q):
        assert poly_eval(F, f, z) != 0
    # least: no lexicographically smaller monic of the degree is irreducible
    for tail in itertools.product(range(q), repeat=deg):
        g = list(tail) + [1]
        if g == f:
            break
        assert not poly_is_irreducible(F, g)


def test_find_rootless_monic_degree_guard():
    with pytest.raises(DegreeTooSmall):
        find_rootless_monic(field_for_order(4), 1)


@pytest.mark.parametrize("Q,q", [(4, 2), (8, 2), (9, 3), (16, 2), (16, 4),
                                 (64, 8), (81, 9), (25, 5)])
def test_subfield_embedding_is_a_ring_hom(Q, q):
    big, small = field_for_order(Q), field_for_order(q)
    ctx = subfield_context(big, small)
    e = ctx.embed
    for a in range(q):
        for b in range(q):
            assert e[small.add_codes(a, b)] == big.add_codes(int(e[a]), int(e[b]))
            assert e[small.mul_codes(a, b)] == big.mul_codes(int(e[a]), int(e[b]))
    # image is exactly the set fixed by x -> x^q
    frob = big.frobenius_table(q)
    fixed = {x for x in range(Q) if frob[x] == x}
    assert fixed == set(int(x) for x in e)


@pytest.mark.parametrize("Q,q", [(16, 4), (64, 8), (81, 9), (16, 2)])
def test_subfield_coordinates_roundtrip(Q, q):
    big, small = field_for_order(Q), field_for_order(q)
    ctx = subfield_context(big, small)
    g = big.tables.generator
    for e in range(Q):
        acc = 0
        for i in range(ctx.s):
            gi = big.pow_code(g, i)
            acc = big.add_codes(acc, big.mul_codes(int(ctx.embed[ctx.coords[e, i]]), gi))
        assert acc == e


@pytest.mark.parametrize("Q,q", [(4, 2), (9, 3), (16, 4), (64, 8)])
def test_trace_properties(Q, q):
    big, small = field_for_order(Q), field_for_order(q)
    ctx = subfield_context(big, small)
    tr = ctx.trace
    # additive, surjective onto the base field, fixed-base scaling rule
    for a in range(Q):
        for b in range(Q):
            assert tr[big.add_codes(a, b)] == small.add_codes(int(tr[a]), int(tr[b]))
    assert set(int(x) for x in tr) == set(range(q))
    for lam in range(q):
        big_lam = int(ctx.embed[lam])
        for a in range(Q):
            assert tr[big.mul_codes(big_lam, a)] == \
                small.mul_codes(lam, int(tr[a]))
