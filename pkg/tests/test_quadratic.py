"""Exact ideal arithmetic in Z[w], w*w = -5, against brute-force module math."""

import random

import pytest

from semideal.errors import EmptyIdeal, NotPrime
from semideal.quadratic import (
    QI_ONE,
    QI_ZERO,
    QuadIdeal,
    enumerate_ideals,
    prime_for_root,
    qi_add,
    qi_conj,
    qi_contains,
    qi_divide,
    qi_factor,
    qi_member,
    qi_mul,
    qi_normalize,
    qi_pow,
    qi_prime_split,
    qi_principal_int,
)
from oracles import quad_member_brute

P2 = QuadIdeal(1, 2, 1)
P3 = QuadIdeal(1, 3, 1)
P3C = QuadIdeal(1, 3, 2)
P5 = QuadIdeal(1, 5, 0)


def members_box(q, box=8):
    return {
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if qi_member(q, x, y)
    }


def test_normalize_known_forms():
    assert qi_normalize([(2, 0), (1, 1)]) == P2
    assert qi_normalize([(6, 0)]) == QuadIdeal(6, 1, 0)
    assert qi_normalize([(0, 1)]) == qi_normalize([(5, 0), (0, 1)])  # (w) = (w, 5)
    assert qi_normalize([(0, 0)]) == QI_ZERO
    assert qi_normalize([]) == QI_ZERO
    assert qi_normalize([(1, 0)]) == QI_ONE


def test_membership_matches_brute():
    for q in enumerate_ideals(30):
        for x in range(-7, 8):
            for y in range(-7, 8):
                assert qi_member(q, x, y) == quad_member_brute(q.g, q.a, q.b, x, y)


def test_normalize_is_smallest_containing_ideal():
    rng = random.Random(11)
    for _ in range(60):
        gens = [(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(rng.randint(1, 3))]
        q = qi_normalize(gens)
        if q.is_zero():
            assert all(g == (0, 0) for g in gens)
            continue
        for x, y in gens:
            assert qi_member(q, x, y)
            # closure under multiplication by w
            assert qi_member(q, -5 * y, x)


def test_mul_known_and_brute():
    assert qi_mul(P2, P2) == QuadIdeal(2, 1, 0)
    assert qi_mul(P3, P3C) == QuadIdeal(3, 1, 0)
    assert qi_mul(P5, P5) == QuadIdeal(5, 1, 0)
    pool = enumerate_ideals(15)
    for i in pool:
        for j in pool:
            prod = qi_mul(i, j)
            # product is generated by pairwise products of the HNF generators
            gens_i = [(i.g * i.a, 0), (i.g * i.b, i.g)]
            gens_j = [(j.g * j.a, 0), (j.g * j.b, j.g)]
            pieces = []
            for x1, y1 in gens_i:
                for x2, y2 in gens_j:
                    # (x1 + y1 w)(x2 + y2 w) = x1 x2 - 5 y1 y2 + (x1 y2 + x2 y1) w
                    pieces.append((x1 * x2 - 5 * y1 * y2, x1 * y2 + x2 * y1))
            assert prod == qi_normalize(pieces)


def test_add_known_and_brute():
    assert qi_add(P2, QuadIdeal(2, 1, 0)) == P2
    assert qi_add(P3, P3C) == QI_ONE
    pool = enumerate_ideals(15)
    for i in pool:
        for j in pool:
            s = qi_add(i, j)
            assert qi_normalize(
                [(i.g * i.a, 0), (i.g * i.b, i.g), (j.g * j.a, 0), (j.g * j.b, j.g)]
            ) == s
            assert qi_contains(s, i) and qi_contains(s, j)


def test_norm_multiplicative():
    pool = enumerate_ideals(25)
    for i in pool:
        for j in pool:
            assert qi_mul(i, j).norm() == i.norm() * j.norm()


def test_conj_involution_and_norm_identity():
    for q in enumerate_ideals(40):
        assert qi_conj(qi_conj(q)) == q
        assert qi_mul(q, qi_conj(q)) == qi_principal_int(q.norm())


def test_pow_matches_repeated_mul():
    for q in (P2, P3, QuadIdeal(2, 3, 2), QI_ONE):
        acc = QI_ONE
        for k in range(5):
            assert qi_pow(q, k) == acc
            acc = qi_mul(acc, q)
    assert qi_pow(QI_ZERO, 3) == QI_ZERO
    assert qi_pow(QI_ZERO, 0) == QI_ONE
    with pytest.raises(ValueError):
        qi_pow(P2, -1)


def test_contains_via_member_sets():
    # every ideal in the pool contains 12*Z^2 (its index divides its norm),
    # so a 12-box window decides containment exactly
    pool = enumerate_ideals(12)
    sets = {q: members_box(q, box=12) for q in pool}
    for i in pool:
        for j in pool:
            assert qi_contains(i, j) == (sets[j] <= sets[i])


def test_divide_exactness():
    pool = enumerate_ideals(12)
    for i in pool:
        for j in pool:
            assert qi_divide(qi_mul(i, j), i) == j
    assert qi_divide(P3, P2) is None
    assert qi_divide(P2, QuadIdeal(2, 1, 0)) is None  # (2) does not divide p2
    assert qi_divide(QI_ZERO, P2) == QI_ZERO
    with pytest.raises(EmptyIdeal):
        qi_divide(P2, QI_ZERO)


def test_prime_split_shapes():
    assert qi_prime_split(2) == (P2,)
    assert qi_prime_split(5) == (P5,)
    assert qi_prime_split(3) == (P3, P3C)
    p7 = qi_prime_split(7)
    assert len(p7) == 2 and {q.b for q in p7} == {3, 4}
    (p11,) = qi_prime_split(11)
    assert p11 == qi_principal_int(11) and p11.norm() == 121
    with pytest.raises(NotPrime):
        qi_prime_split(6)
    with pytest.raises(NotPrime):
        qi_prime_split(1)


def test_prime_for_root():
    assert prime_for_root(3, 1) == P3
    assert prime_for_root(11, None) == QuadIdeal(11, 1, 0)


def test_factor_known():
    assert qi_factor(qi_principal_int(6)) == {(2, 1): 2, (3, 1): 1, (3, 2): 1}
    assert qi_factor(QI_ONE) == {}
    assert qi_factor(P2) == {(2, 1): 1}
    assert qi_factor(QuadIdeal(1, 6, 1)) == {(2, 1): 1, (3, 1): 1}
    with pytest.raises(EmptyIdeal):
        qi_factor(QI_ZERO)


def test_factor_composes_back():
    for q in enumerate_ideals(60):
        fac = qi_factor(q)  # self-certifying: raises if recomposition fails
        composed = QI_ONE
        for (p, b), e in fac.items():
            composed = qi_mul(composed, qi_pow(prime_for_root(p, b), e))
        assert composed == q


def test_enumerate_ideals_valid_and_counts():
    pool = enumerate_ideals(30)
    assert len(pool) == len(set(pool))
    for q in pool:
        assert q.g >= 1 and q.a >= 1 and 0 <= q.b < q.a
        assert (q.b * q.b + 5) % q.a == 0
        assert q.norm() <= 30
    by_norm = {}
    for q in pool:
        by_norm[q.norm()] = by_norm.get(q.norm(), 0) + 1
    assert by_norm[1] == 1
    assert by_norm[2] == 1  # one prime over 2
    assert by_norm[3] == 2  # split
    assert by_norm[4] == 1  # only (2)
    assert by_norm[5] == 1  # ramified
    assert by_norm[6] == 2
    assert by_norm[7] == 2  # split
    assert by_norm[9] == 3  # p3^2, p3'^2, (3)
    assert 11 not in by_norm  # inert: no ideal of norm 11
    assert 13 not in by_norm  # inert as well
