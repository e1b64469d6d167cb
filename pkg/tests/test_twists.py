import json

import numpy as np
import pytest

from twistalg import (
    ContextMismatchError,
    TableFormatError,
    cayley_dickson_twist,
    check_associative,
    check_commutative,
    check_invertive,
    check_proper,
    check_unital,
    clifford_twist,
    custom_twist,
    cyclic_group,
    hadamard_twist,
    is_proper,
    named_twist,
    parse_twist_spec,
    table_from_csv,
    table_from_json_obj,
    table_to_csv,
    table_to_json_obj,
    trivial_twist,
    twist_product,
    xor_group,
)

from _helpers import invertive_non_proper_twist, non_invertive_twist


def popcount(v: int) -> int:
    return bin(v).count("1")


# construction ---------------------------------------------------------------


def test_trivial_twist():
    t = trivial_twist(cyclic_group(3))
    assert t.signs.shape == (3, 3)
    assert np.all(t.signs == 1)
    assert trivial_twist(xor_group(0)).signs.tolist() == [[1]]
    assert is_proper(t)


@pytest.mark.parametrize("exponent", [0, 1, 2, 3])
def test_hadamard_matches_parity_oracle(exponent):
    t = hadamard_twist(exponent)
    for p in range(t.order):
        for q in range(t.order):
            assert t.sign(p, q) == (-1) ** popcount(p & q)


def test_hadamard_examples():
    assert hadamard_twist(1).sign(1, 1) == -1
    assert all(hadamard_twist(3).sign(p, 0) == 1 for p in range(8))
    assert hadamard_twist(2).sign(3, 3) == 1  # popcount(3) = 2


def test_cayley_dickson_examples():
    t = cayley_dickson_twist(4)
    assert t.sign(1, 2) == 1
    assert t.sign(2, 1) == -1
    for n in range(5):
        tn = cayley_dickson_twist(n)
        for p in range(tn.order):
            assert tn.sign(p, 0) == 1
            assert tn.sign(0, p) == 1


def _cd_piecewise(p: int, q: int) -> int:
    """The five-case doubling recursion, written independently of the
    block-matrix construction; the two presentations must agree."""
    if p == 0 or q == 0:
        return 1
    ph, pr = divmod(p, 2)
    qh, qr = divmod(q, 2)
    if pr == 0 and qr == 0:
        return _cd_piecewise(ph, qh)
    if pr == 1 and qr == 0:
        return _cd_piecewise(qh, ph)
    if pr == 0 and qr == 1:
        return -_cd_piecewise(ph, qh) if ph != 0 else 1
    return _cd_piecewise(qh, ph) if ph != 0 else -1


@pytest.mark.parametrize("exponent", [0, 1, 2, 3, 4, 5])
def test_cd_block_recursion_equals_piecewise(exponent):
    t = cayley_dickson_twist(exponent)
    for p in range(t.order):
        for q in range(t.order):
            assert t.sign(p, q) == _cd_piecewise(p, q), (p, q)


def test_clifford_examples():
    assert clifford_twist(4).sign(13, 6) == -1
    assert clifford_twist(1).sign(1, 1) == 1
    assert clifford_twist(2).sign(3, 3) == -1  # grade 2, s = 3


@pytest.mark.parametrize("exponent", [1, 2, 3, 4, 5])
def test_clifford_diagonal_formula(exponent):
    # square of a grade-g blade carries g(g-1)/2 transpositions, so the
    # diagonal is +,+,-,- repeating with the grade
    t = clifford_twist(exponent)
    for p in range(t.order):
        g = popcount(p)
        assert t.sign(p, p) == (-1) ** (g * (g - 1) // 2)


def test_tables_are_immutable():
    t = cayley_dickson_twist(2)
    with pytest.raises(ValueError):
        t.signs[1, 1] = 1


# twist product ----------------------------------------------------------------


def test_twist_product_identities():
    h = hadamard_twist(2)
    t = trivial_twist(xor_group(2))
    assert twist_product(h, t) == h
    assert twist_product(h, h) == t
    assert twist_product(cayley_dickson_twist(2), trivial_twist(xor_group(2))) == cayley_dickson_twist(2)


def test_twist_product_group_mismatch():
    with pytest.raises(ContextMismatchError):
        twist_product(hadamard_twist(2), trivial_twist(cyclic_group(4)))


# predicates -------------------------------------------------------------------


def test_commutative_checks():
    assert check_commutative(trivial_twist(cyclic_group(5))).holds
    assert check_commutative(hadamard_twist(3)).holds
    report = check_commutative(cayley_dickson_twist(2))
    assert not report.holds
    assert report.witness == (1, 2)
    p, q = report.witness
    t = cayley_dickson_twist(2)
    assert t.sign(p, q) != t.sign(q, p)


def test_associative_checks():
    assert check_associative(hadamard_twist(3)).holds
    assert check_associative(clifford_twist(4)).holds
    report = check_associative(cayley_dickson_twist(3))
    assert not report.holds
    assert set(report.witness) <= {1, 2, 4}
    p, q, r = report.witness
    t = cayley_dickson_twist(3)
    g = t.group
    assert t.sign(p, q) * t.sign(g.product(p, q), r) != t.sign(p, g.product(q, r)) * t.sign(q, r)


def test_invertive_checks():
    for t in (hadamard_twist(3), cayley_dickson_twist(3), clifford_twist(3)):
        assert check_invertive(t).holds  # p inverse = p on xor groups
    assert check_invertive(trivial_twist(cyclic_group(5))).holds
    bad = non_invertive_twist()
    report = check_invertive(bad)
    assert not report.holds and report.witness == (1,)


@pytest.mark.parametrize("exponent", [0, 1, 2, 3, 4, 5])
def test_cayley_dickson_proper(exponent):
    r1, r2 = check_proper(cayley_dickson_twist(exponent))
    assert r1.holds and r2.holds


@pytest.mark.parametrize("exponent", [0, 1, 2, 3, 4, 5])
def test_clifford_proper(exponent):
    assert is_proper(clifford_twist(exponent))


def test_flipped_sign_breaks_properness():
    t = cayley_dickson_twist(2)
    signs = t.signs.copy()
    signs[1, 2] = -signs[1, 2]
    flipped = custom_twist(xor_group(2), signs)
    r1, r2 = check_proper(flipped)
    assert not r1.holds
    assert r1.witness == (1, 2)
    # re-evaluating condition 1 at the witness reproduces the failure
    p, q = r1.witness
    g = flipped.group
    qinv = g.inverse(q)
    assert flipped.sign(p, q) * flipped.sign(q, qinv) != flipped.sign(g.product(p, q), qinv)


def test_invertive_non_proper_fixture():
    t = invertive_non_proper_twist()
    assert check_invertive(t).holds
    assert not is_proper(t)


def test_proper_witness_never_in_identity_row():
    # unitality pins row/column 0, so both properness conditions hold
    # identically there and a witness can never involve the identity
    t = invertive_non_proper_twist()
    for rep in check_proper(t):
        if rep.witness is not None:
            assert 0 not in rep.witness


def test_unitality_enforced():
    bad = np.ones((3, 3), dtype=np.int8)
    bad[0, 1] = -1
    with pytest.raises(TableFormatError):
        custom_twist(cyclic_group(3), bad)
    bad2 = np.ones((3, 3), dtype=np.int8)
    bad2[1, 1] = 0
    with pytest.raises(TableFormatError):
        custom_twist(cyclic_group(3), bad2)
    with pytest.raises(TableFormatError):
        custom_twist(cyclic_group(3), np.ones((2, 2), dtype=np.int8))
    assert check_unital(trivial_twist(cyclic_group(4))).holds


# quaternion and properness identities over the CD twist ------------------------


@pytest.mark.parametrize("exponent", [2, 3, 4, 5])
def test_quaternion_properties(exponent):
    t = cayley_dickson_twist(exponent)
    n = t.order
    for p in range(1, n):
        assert t.sign(p, p) == -1
        for q in range(1, n):
            if p == q:
                continue
            pq = p ^ q
            assert t.sign(p, q) == -t.sign(q, p)
            assert t.sign(p, q) == t.sign(q, pq) == t.sign(pq, p)


@pytest.mark.parametrize("exponent", [0, 1, 2, 3, 4, 5])
def test_cd_properness_display_forms(exponent):
    t = cayley_dickson_twist(exponent)
    n = t.order
    for p in range(n):
        for q in range(n):
            pq = p ^ q
            assert t.sign(p, q) * t.sign(q, q) == t.sign(pq, q)
            assert t.sign(p, p) * t.sign(p, q) == t.sign(p, pq)


def test_cd_power_of_two_rule():
    # cyd(2^n, k 2^(n+1)) = +1 whenever the pair is in range, up to order 256
    t = cayley_dickson_twist(8)
    n = t.order
    for e in range(8):
        p = 1 << e
        step = 1 << (e + 1)
        for q in range(0, n, step):
            assert t.sign(p, q) == 1, (p, q)


# serialization -----------------------------------------------------------------


def test_csv_round_trip():
    t = cayley_dickson_twist(3)
    text = table_to_csv(t)
    assert text.count("\n") == 8
    back = table_from_csv(text, xor_group(3))
    assert back == t


def test_json_round_trip():
    t = clifford_twist(2)
    obj = json.loads(json.dumps(table_to_json_obj(t)))
    back = table_from_json_obj(obj)
    assert back == t
    assert back.name == "clifford"
    assert back.group == xor_group(2)


def test_named_twist_and_spec_parsing():
    assert parse_twist_spec("cayley_dickson:3") == cayley_dickson_twist(3)
    assert parse_twist_spec("hadamard:2") == hadamard_twist(2)
    assert parse_twist_spec("clifford:4") == clifford_twist(4)
    assert parse_twist_spec("trivial:cyclic:5") == trivial_twist(cyclic_group(5))
    assert parse_twist_spec("trivial:7") == trivial_twist(cyclic_group(7))
    assert parse_twist_spec("hadamard:xor:3") == hadamard_twist(3)
    with pytest.raises(ValueError):
        parse_twist_spec("nope:3")
    with pytest.raises(ValueError):
        named_twist("hadamard", cyclic_group(3))
