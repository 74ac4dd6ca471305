"""Canonical n0 ideal triples against the brute-force closure oracle."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semideal.errors import EmptyIdeal, ZeroDivisorIdeal
from semideal.natideal import (
    NAT_FULL,
    NAT_MAX,
    NAT_ZERO,
    NatIdeal,
    from_generators,
    from_periodic,
    minimal_generators,
    nat_between,
    nat_contains,
    nat_divides,
    nat_intersect,
    nat_is_maximal,
    nat_is_prime,
    nat_is_subtractive,
    nat_power,
    nat_product,
    nat_quotient,
    nat_scale,
    nat_sum,
    nat_unscale,
)
from oracles import (
    n0_intersect,
    n0_members,
    n0_product,
    n0_quotient,
    n0_sum,
    closure_members,
)

GEN_SETS = [
    (1,),
    (2,),
    (5,),
    (2, 3),
    (3, 4),
    (3, 4, 5),
    (4, 6, 9),
    (2, 5),
    (6, 10, 15),
    (4, 5),
    (3, 5, 7),
    (8, 12, 18, 27),
    (7, 11),
]


def window(i, pad=1):
    """A bound beyond which i is plainly periodic."""
    return (i.c if i.c else i.d) + pad * max(i.d, 1) + 1


def assert_canonical(i):
    if i.d == 0:
        assert i == NAT_ZERO
        return
    assert i.c % i.d == 0
    assert list(i.ex) == sorted(set(i.ex))
    for e in i.ex:
        assert 0 < e < i.c and e % i.d == 0
    if i.c:
        assert i.c >= 2 * i.d  # threshold d would collapse to c = 0
        assert (i.c - i.d) not in i.ex  # threshold is minimal


def assert_matches(i, member_set, limit):
    assert i.members_below(limit) == sorted(x for x in member_set if x < limit)


def test_known_canonical_forms():
    assert from_generators([]) == NAT_ZERO
    assert from_generators([0, 0]) == NAT_ZERO
    assert from_generators([1]) == NAT_FULL
    assert from_generators([2, 3]) == NAT_MAX
    assert from_generators([3, 4, 5]) == NatIdeal(1, 3, ())
    assert from_generators([2]) == NatIdeal(2, 0, ())
    assert from_generators([4, 6]) == NatIdeal(2, 4, ())
    assert from_generators([4, 6, 9]) == NatIdeal(1, 12, (4, 6, 8, 9, 10))
    assert from_generators([6, 10, 15]) == NatIdeal(1, 30, (6, 10, 12, 15, 16, 18, 20, 21, 22, 24, 25, 26, 27, 28))


def test_from_generators_matches_oracle():
    for gens in GEN_SETS:
        i = from_generators(gens)
        assert_canonical(i)
        lim = window(i, pad=3) + max(gens)
        assert_matches(i, n0_members(gens, lim), lim)


@settings(deadline=None, max_examples=150)
@given(st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=5))
def test_from_generators_matches_oracle_hyp(gens):
    i = from_generators(gens)
    assert_canonical(i)
    lim = window(i, pad=3) + max(gens)
    assert_matches(i, n0_members(gens, lim), lim)


@settings(deadline=None, max_examples=80)
@given(st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=4))
def test_regenerating_from_members_is_identity(gens):
    i = from_generators(gens)
    # The member list determines i only past c + least nonzero member: every
    # member beyond that peels down by the least member into the window
    # (e.g. gens [5,11,18,24] have c=20 but 24 is no sum of members < 23).
    least = i.ex[0] if i.ex else (i.c if i.c else i.d)
    lim = (i.c if i.c else i.d) + least + 1
    assert from_generators(i.members_below(lim)) == i


def test_from_generators_rejects_negative():
    with pytest.raises(ValueError):
        from_generators([3, -2])


def test_contains_and_min_nonzero():
    i = from_generators([4, 6, 9])
    mem = n0_members((4, 6, 9), 200)
    for x in range(200):
        assert i.contains(x) == (x in mem)
    assert i.min_nonzero() == 4
    assert NAT_MAX.min_nonzero() == 2
    assert NAT_FULL.min_nonzero() == 1
    assert NatIdeal(3, 0, ()).min_nonzero() == 3
    with pytest.raises(EmptyIdeal):
        NAT_ZERO.min_nonzero()
    assert NAT_ZERO.members_below(10) == [0]
    assert NAT_ZERO.members_below(0) == []


def test_from_periodic_canonicalizes():
    assert from_periodic(1, 4, [2, 3]) == NAT_MAX
    assert from_periodic(2, 4, [2]) == NatIdeal(2, 0, ())
    assert from_periodic(2, 2, []) == NatIdeal(2, 0, ())
    assert from_periodic(3, 0, []) == NatIdeal(3, 0, ())
    assert from_periodic(0, 0, []) == NAT_ZERO
    with pytest.raises(ValueError):
        from_periodic(0, 0, [3])
    with pytest.raises(ValueError):
        from_periodic(2, 6, [3])


@settings(deadline=None, max_examples=80)
@given(st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=4))
def test_from_periodic_roundtrip(gens):
    i = from_generators(gens)
    assert from_periodic(i.d, i.c, i.ex) == i


def test_minimal_generators_known():
    assert minimal_generators(NAT_ZERO) == ()
    assert minimal_generators(NAT_FULL) == (1,)
    assert minimal_generators(NAT_MAX) == (2, 3)
    assert minimal_generators(from_generators([3, 4, 5])) == (3, 4, 5)
    assert minimal_generators(from_generators([4, 6, 9])) == (4, 6, 9)
    assert minimal_generators(from_generators([2, 4, 8])) == (2,)


@settings(deadline=None, max_examples=100)
@given(st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=5))
def test_minimal_generators_properties(gens):
    i = from_generators(gens)
    mg = minimal_generators(i)
    assert from_generators(mg) == i
    # each listed generator is not a sum of two nonzero members
    lim = max(mg) + 1
    mem = set(i.members_below(lim)) - {0}
    for g in mg:
        assert not any(g - m in mem for m in mem if 0 < m < g)
    # and every other small member is such a sum
    for m in sorted(mem):
        if m not in mg:
            assert any(m - x in mem for x in mem if 0 < x < m)


def pair_window(i, j):
    """Decisive comparison window for two nonzero ideals (covers both tails)."""
    lcm = i.d * j.d // math.gcd(i.d, j.d)
    return max(i.c, j.c, 1) + lcm + 1


def test_binary_ops_match_oracle():
    rng = random.Random(42)
    pairs = [(a, b) for a in GEN_SETS for b in GEN_SETS]
    rng.shuffle(pairs)
    for ga, gb in pairs[:60]:
        a, b = from_generators(ga), from_generators(gb)
        s = nat_sum(a, b)
        p = nat_product(a, b)
        x = nat_intersect(a, b)
        q = nat_quotient(a, b)
        for r in (s, p, x, q):
            assert_canonical(r)
        lim = max(window(s, 2), window(p, 2), window(x, 2), window(q, 2))
        assert_matches(s, n0_sum(ga, gb, lim), lim)
        assert_matches(p, n0_product(ga, gb, lim), lim)
        assert_matches(x, n0_intersect(ga, gb, lim), lim)
        assert_matches(q, n0_quotient(ga, gb, lim), lim)


@settings(deadline=None, max_examples=60)
@given(
    st.lists(st.integers(min_value=1, max_value=25), min_size=1, max_size=3),
    st.lists(st.integers(min_value=1, max_value=25), min_size=1, max_size=3),
)
def test_binary_ops_match_oracle_hyp(ga, gb):
    a, b = from_generators(ga), from_generators(gb)
    for op, oracle in (
        (nat_sum, n0_sum),
        (nat_product, n0_product),
        (nat_intersect, n0_intersect),
        (nat_quotient, n0_quotient),
    ):
        r = op(a, b)
        assert_canonical(r)
        lim = window(r, 2)
        assert_matches(r, oracle(ga, gb, lim), lim)


def test_zero_ideal_op_edges():
    a = from_generators([2, 3])
    assert nat_sum(a, NAT_ZERO) == a
    assert nat_product(a, NAT_ZERO) == NAT_ZERO
    assert nat_intersect(a, NAT_ZERO) == NAT_ZERO
    assert nat_quotient(NAT_ZERO, a) == NAT_ZERO
    assert nat_quotient(a, NAT_FULL) == a
    with pytest.raises(ZeroDivisorIdeal):
        nat_quotient(a, NAT_ZERO)
    with pytest.raises(ZeroDivisorIdeal):
        nat_divides(NAT_ZERO, a)
    assert nat_divides(a, NAT_ZERO) == NAT_ZERO


def test_power():
    m = NAT_MAX
    assert nat_power(m, 0) == NAT_FULL
    assert nat_power(m, 1) == m
    assert nat_power(m, 2) == nat_product(m, m)
    assert nat_power(m, 2) == NatIdeal(1, 12, (4, 6, 8, 9, 10))
    assert nat_power(m, 3) == nat_product(nat_product(m, m), m)
    with pytest.raises(ValueError):
        nat_power(m, -1)


def test_contains_matches_window_subsets():
    ideals = [from_generators(g) for g in GEN_SETS]
    for i in ideals:
        for j in ideals:
            lim = pair_window(i, j)
            expected = set(j.members_below(lim)) <= set(i.members_below(lim))
            assert nat_contains(i, j) == expected
    assert nat_contains(from_generators([2]), NAT_ZERO)
    assert not nat_contains(NAT_ZERO, from_generators([2]))
    assert nat_contains(NAT_ZERO, NAT_ZERO)


def test_divides_soundness_and_completeness():
    rng = random.Random(9)
    ideals = [from_generators(g) for g in GEN_SETS]
    for _ in range(120):
        a = rng.choice(ideals)
        b = rng.choice(ideals)
        prod = nat_product(a, b)
        q = nat_divides(a, prod)
        assert q is not None and nat_product(a, q) == prod
    # completeness falsification: when None, no random cofactor works
    a = from_generators([2])
    b = from_generators([2, 3])  # odd members exist, (2) cannot divide it
    assert nat_divides(a, b) is None
    for _ in range(300):
        gens = [rng.randint(1, 30) for _ in range(rng.randint(1, 3))]
        assert nat_product(a, from_generators(gens)) != b
    m = NAT_MAX
    assert nat_divides(m, from_generators([3, 4, 5])) is None


def test_subtractive_flag():
    assert nat_is_subtractive(NAT_ZERO)
    assert nat_is_subtractive(NAT_FULL)
    assert nat_is_subtractive(from_generators([4]))
    assert not nat_is_subtractive(NAT_MAX)
    assert not nat_is_subtractive(from_generators([3, 4, 5]))


def test_prime_maximal_classification():
    assert nat_is_prime(NAT_ZERO)
    assert nat_is_prime(NAT_MAX)
    assert nat_is_prime(from_generators([7]))
    assert not nat_is_prime(NAT_FULL)
    assert not nat_is_prime(from_generators([4]))
    assert not nat_is_prime(from_generators([3, 4, 5]))
    assert not nat_is_prime(from_generators([4, 6, 9]))
    assert nat_is_maximal(NAT_MAX)
    assert not nat_is_maximal(from_generators([2]))


def brute_prime(i, bound):
    if i == NAT_FULL:
        return False
    for x in range(bound):
        if i.contains(x):
            continue
        for y in range(x, bound):
            if not i.contains(y) and i.contains(x * y):
                return False
    return True


@settings(deadline=None, max_examples=40)
@given(st.lists(st.integers(min_value=1, max_value=15), min_size=1, max_size=3))
def test_prime_agrees_with_brute(gens):
    # bound covers the witnesses (c-d, c-d) resp. (F, F), so brute is exact here
    i = from_generators(gens)
    bound = max(40, i.c + i.d + 1)
    assert nat_is_prime(i) == brute_prime(i, bound)


def test_between_known():
    got = nat_between(NAT_MAX)
    assert got == from_generators([2, 9])
    m2 = nat_product(NAT_MAX, NAT_MAX)
    assert nat_contains(got, m2) and got != m2
    assert nat_contains(NAT_MAX, got) and got != NAT_MAX
    # even a principal prime has something strictly between (p^2) and (p) here
    assert nat_between(from_generators([3])) == from_generators([6, 9])


def test_scale_unscale():
    i = from_generators([4, 6, 9])
    s = nat_scale(i, 3)
    assert s == NatIdeal(3, 36, (12, 18, 24, 27, 30))
    assert nat_unscale(s, 3) == i
    assert nat_scale(NAT_ZERO, 5) == NAT_ZERO
    assert nat_scale(i, 1) == i
    with pytest.raises(ValueError):
        nat_scale(i, 0)
    with pytest.raises(ValueError):
        nat_unscale(i, 2)
    # scaling matches the oracle on members
    lim = 120
    scaled = {3 * m for m in n0_members((4, 6, 9), lim)}
    assert s.members_below(lim) == sorted(x for x in scaled if x < lim)


def test_closure_oracle_self_check():
    # the oracle itself: numeric-semigroup classics
    assert sorted(closure_members((3, 5), 20)) == [0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20]
    assert 7 not in closure_members((3, 5), 20)
