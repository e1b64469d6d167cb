import random

import pytest

from twistalg import (
    ContextMismatchError,
    basis,
    blade_factor_cd,
    cayley_dickson_twist,
    conjugate,
    element,
    find_zero_divisor,
    hadamard_twist,
    left_nested_blade_product,
    multiply,
    one,
    pair_conjugate,
    pair_product,
    quaternion_triplets,
    shuffle,
    unshuffle,
    zero,
)

from _helpers import rand_exact

PAPER_TRIPLETS_3 = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 7, 5), (3, 6, 5), (3, 7, 4)]


# shuffle embedding -----------------------------------------------------------


@pytest.mark.parametrize("exponent", [0, 1, 2, 3])
def test_shuffle_basis_identities(exponent):
    t = cayley_dickson_twist(exponent)
    big = cayley_dickson_twist(exponent + 1)
    for p in range(t.order):
        assert shuffle(basis(t, p), zero(t)) == basis(big, 2 * p)
        assert shuffle(zero(t), basis(t, p)) == basis(big, 2 * p + 1)


def test_unshuffle_inverts_shuffle():
    rng = random.Random(7)
    t = cayley_dickson_twist(3)
    x, y = rand_exact(t, rng), rand_exact(t, rng)
    assert unshuffle(shuffle(x, y)) == (x, y)


def test_shuffle_level_mismatch():
    with pytest.raises(ContextMismatchError):
        shuffle(one(cayley_dickson_twist(1)), one(cayley_dickson_twist(2)))
    with pytest.raises(ValueError):
        unshuffle(one(cayley_dickson_twist(0)))


def test_shuffle_rejects_foreign_context():
    with pytest.raises(ContextMismatchError):
        pair_product(one(hadamard_twist(2)), one(hadamard_twist(2)))


# pair product ----------------------------------------------------------------


def test_pair_product_complex_numbers():
    t = cayley_dickson_twist(1)
    i = basis(t, 1)
    assert pair_product(i, i) == -one(t)  # (0,1)(0,1) = (-1,0)


def test_pair_product_identity():
    rng = random.Random(13)
    t = cayley_dickson_twist(3)
    x = rand_exact(t, rng)
    assert pair_product(one(t), x) == x
    assert pair_product(x, one(t)) == x


@pytest.mark.parametrize("exponent", [0, 1, 2, 3, 4])
def test_pair_product_matches_twist_on_basis(exponent):
    t = cayley_dickson_twist(exponent)
    for p in range(t.order):
        for q in range(t.order):
            assert pair_product(basis(t, p), basis(t, q)) == multiply(basis(t, p), basis(t, q))


@pytest.mark.parametrize("exponent", [1, 2, 3, 4])
def test_pair_product_matches_twist_on_random(exponent):
    rng = random.Random(exponent)
    t = cayley_dickson_twist(exponent)
    for _ in range(25):
        x, y = rand_exact(t, rng), rand_exact(t, rng)
        assert pair_product(x, y) == multiply(x, y)


@pytest.mark.parametrize("exponent", [0, 1, 2, 3])
def test_doubling_basis_identities(exponent):
    """The four embeddings of level-N basis products into level N+1."""
    t = cayley_dickson_twist(exponent)
    big = cayley_dickson_twist(exponent + 1)
    z = zero(t)
    for p in range(t.order):
        for q in range(t.order):
            ip, iq = basis(t, p), basis(t, q)
            prod = multiply(ip, iq)
            rev = multiply(iq, ip)
            conj_prod = multiply(conjugate(ip), iq)
            rev_conj = multiply(iq, conjugate(ip))
            assert multiply(basis(big, 2 * p), basis(big, 2 * q)) == shuffle(prod, z)
            assert multiply(basis(big, 2 * p), basis(big, 2 * q + 1)) == shuffle(z, conj_prod)
            assert multiply(basis(big, 2 * p + 1), basis(big, 2 * q)) == shuffle(z, rev)
            assert multiply(basis(big, 2 * p + 1), basis(big, 2 * q + 1)) == -shuffle(rev_conj, z)


# pair conjugate ----------------------------------------------------------------


def test_pair_conjugate_examples():
    t = cayley_dickson_twist(3)
    assert pair_conjugate(one(t)) == one(t)
    for p in range(1, 8):
        assert pair_conjugate(basis(t, p)) == -basis(t, p)


def test_pair_conjugate_matches_algebra_conjugate():
    rng = random.Random(19)
    t = cayley_dickson_twist(3)
    for _ in range(20):
        x = rand_exact(t, rng)
        assert pair_conjugate(x) == conjugate(x)


# triplets ------------------------------------------------------------------------


def test_triplets_paper_list():
    assert quaternion_triplets(3) == PAPER_TRIPLETS_3


def test_triplets_n2():
    assert quaternion_triplets(2) == [(1, 2, 3)]


@pytest.mark.parametrize("exponent", [2, 3, 4])
def test_triplet_signs_and_closure(exponent):
    t = cayley_dickson_twist(exponent)
    triples = quaternion_triplets(exponent)
    # every nonzero element appears; each class once
    n = t.order
    assert len(triples) == (n - 1) * (n - 2) // 6
    for p, q, r in triples:
        assert p ^ q == r
        assert t.sign(p, q) == t.sign(q, r) == t.sign(r, p) == 1
        assert multiply(basis(t, p), basis(t, q)) == basis(t, r)


def test_triplets_requires_two_levels():
    with pytest.raises(ValueError):
        quaternion_triplets(1)


# blade factorization ---------------------------------------------------------------


def test_blade_factor_examples():
    assert blade_factor_cd(51) == [0, 1, 4, 5]
    assert blade_factor_cd(16) == [4]
    assert blade_factor_cd(0) == []


def test_left_nested_product_exhaustive():
    t = cayley_dickson_twist(6)
    for p in range(64):
        assert left_nested_blade_product(p, t) == basis(t, p)


def test_blade_factor_rejects_negative():
    with pytest.raises(ValueError):
        blade_factor_cd(-1)


# zero divisors in the doubled algebras ----------------------------------------------


def test_hadamard_n2_has_zero_divisors():
    t = hadamard_twist(2)
    x = one(t) - basis(t, 3)
    y = one(t) + basis(t, 3)
    assert multiply(x, y).is_zero()  # hdm(3,3) = +1 makes (1-i3)(1+i3) collapse
    witness = find_zero_divisor(t)
    assert witness is not None
    wx, wy = witness
    assert multiply(wx, wy).is_zero() and not wx.is_zero() and not wy.is_zero()


def test_quaternions_have_no_basis_pair_zero_divisors():
    assert find_zero_divisor(cayley_dickson_twist(2)) is None
