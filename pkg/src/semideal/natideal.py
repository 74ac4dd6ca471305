"""Canonical finite presentations of ideals of (N0, +, *).

Ideals of the usual naturals coincide with additive submonoids: they are
{0} plus an eventually periodic set. We store the unique triple (d, c, ex)
with members = {0} u ex u {n >= c : d | n}, where d is the gcd of all
members (0 for the zero ideal), c is the least threshold from which the set
is purely periodic (a multiple of d, 0 when there are no gaps) and ex lists
the nonzero members below c in ascending order. Equality of ideals is tuple
equality.

The closure bitmaps come from the selected kernel backend; an adaptive
window is grown until min(gens/d) consecutive scaled members are seen, which
certifies that everything beyond is a member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._kernels import additive_closure
from .errors import EmptyIdeal, ZeroDivisorIdeal


@dataclass(frozen=True, order=True)
class NatIdeal:
    d: int
    c: int
    ex: tuple

    def contains(self, x):
        if x == 0:
            return True
        if self.d == 0:
            return False
        if x >= self.c:
            return x % self.d == 0
        return x in self.ex

    def min_nonzero(self):
        if self.d == 0:
            raise EmptyIdeal("the zero ideal has no nonzero member")
        if self.ex:
            return self.ex[0]
        return self.c if self.c > 0 else self.d

    def members_below(self, bound):
        """Sorted members < bound."""
        out = [0] if bound > 0 else []
        out.extend(e for e in self.ex if e < bound)
        if self.d > 0:
            start = self.c if self.c > 0 else self.d
            out.extend(range(start, bound, self.d))
        return out


NAT_ZERO = NatIdeal(0, 0, ())
NAT_FULL = NatIdeal(1, 0, ())
NAT_MAX = NatIdeal(1, 2, ())  # every natural except 1


def _run_start(mask, m):
    """Index of the first run of m consecutive set bits, or None."""
    z = mask
    have = 1
    while have < m and z:
        step = min(have, m - have)
        z &= z >> step
        have += step
    if z == 0:
        return None
    return (z & -z).bit_length() - 1


def _scaled_bits_to_ideal(d, mask, run):
    """Canonical triple from an exact scaled membership mask.

    Bits of mask are exact up to at least ``run``; every scaled value >= run
    is known to be a member.
    """
    gaps = ~mask & ((1 << (run + 1)) - 1)
    if gaps == 0:
        return NatIdeal(d, 0, ())
    z0 = gaps.bit_length() - 1
    ex = []
    t = mask & ((1 << z0) - 1) & ~1
    while t:
        low = t & -t
        ex.append((low.bit_length() - 1) * d)
        t ^= low
    return NatIdeal(d, (z0 + 1) * d, tuple(ex))


def from_generators(gens):
    gens = sorted({int(g) for g in gens if g})
    if any(g < 0 for g in gens):
        raise ValueError("generators must be nonnegative")
    if not gens:
        return NAT_ZERO
    d = math.gcd(*gens)
    scaled = [g // d for g in gens]
    m = scaled[0]
    limit = 4 * scaled[-1] + 1
    while True:
        mask = additive_closure(scaled, limit)
        run = _run_start(mask, m)
        if run is not None:
            return _scaled_bits_to_ideal(d, mask, run)
        limit *= 4


def from_periodic(d, threshold, extras):
    """Ideal with members {0} u extras u {multiples of d >= threshold}.

    The caller guarantees the set is additively closed; extras are then
    necessarily multiples of d (checked) and the triple is canonicalized.
    """
    if d == 0:
        if any(extras):
            raise ValueError("zero period with extra members")
        return NAT_ZERO
    ex = sorted({int(e) for e in extras if e})
    if any(e % d for e in ex):
        raise ValueError("extras must be multiples of the period")
    t = (max(0, threshold) + d - 1) // d  # scaled start of the periodic tail
    scaled = {e // d for e in ex if e // d < t}
    z0 = None
    for n in range(t - 1, 0, -1):
        if n not in scaled:
            z0 = n
            break
    if z0 is None:
        return NatIdeal(d, 0, ())
    ex_out = tuple(sorted(n * d for n in scaled if n < z0))
    return NatIdeal(d, (z0 + 1) * d, ex_out)


def minimal_generators(i):
    """The unique minimal generating set (members that are not sums)."""
    if i.d == 0:
        return ()
    if i.c == 0:
        return (i.d,)
    d = i.d
    cs = i.c // d
    ms = i.min_nonzero() // d
    limit = cs + ms
    mask = 1
    for e in i.ex:
        mask |= 1 << (e // d)
    mask |= ((1 << (limit + 1)) - 1) & ~((1 << cs) - 1)
    nz = mask & ~1
    window = (1 << (limit + 1)) - 1
    sums = 0
    t = nz
    while t:
        low = t & -t
        u = low.bit_length() - 1
        if u > limit:
            break
        sums |= (nz << u) & window
        t ^= low
    gens_mask = nz & ~sums
    out = []
    while gens_mask:
        low = gens_mask & -gens_mask
        out.append((low.bit_length() - 1) * d)
        gens_mask ^= low
    return tuple(out)


def nat_sum(i, j):
    return from_generators(minimal_generators(i) + minimal_generators(j))


def nat_product(i, j):
    gi, gj = minimal_generators(i), minimal_generators(j)
    if not gi or not gj:
        return NAT_ZERO
    return from_generators([a * b for a in gi for b in gj])


def nat_power(i, k):
    if k < 0:
        raise ValueError("negative ideal power")
    out = NAT_FULL
    base = i
    while k:
        if k & 1:
            out = nat_product(out, base)
        base = nat_product(base, base)
        k >>= 1
    return out


def nat_intersect(i, j):
    if i.d == 0 or j.d == 0:
        return NAT_ZERO
    d = i.d * j.d // math.gcd(i.d, j.d)
    t = max(i.c, j.c)
    extras = [x for x in i.members_below(t) if x and j.contains(x)]
    return from_periodic(d, t, extras)


def _scale_quotient(a, g):
    """{x : x*g in a} for a single positive g; always an ideal."""
    dq = a.d // math.gcd(a.d, g)
    t = -(-a.c // g)
    extras = [e // g for e in a.ex if e % g == 0]
    return from_periodic(dq, t, extras)


def nat_quotient(a, b):
    """[a : b] = {x : x*b subseteq a}; b must be nonzero."""
    if b.d == 0:
        raise ZeroDivisorIdeal("quotient by the zero ideal")
    if a.d == 0:
        return NAT_ZERO
    q = NAT_FULL
    for g in minimal_generators(b):
        q = nat_intersect(q, _scale_quotient(a, g))
    return q


def nat_contains(i, j):
    """True iff j is a subset of i."""
    if j.d == 0:
        return True
    if i.d == 0:
        return False
    if j.d % i.d:
        return False
    if any(not i.contains(e) for e in j.ex):
        return False
    x = j.c if j.c > 0 else j.d
    while x < i.c:
        if not i.contains(x):
            return False
        x += j.d
    return True


def nat_divides(a, b):
    """Cofactor q with a*q == b, or None; exact in both directions.

    If any cofactor exists it is contained in [b:a], and then
    a*[b:a] is squeezed between a*q = b and b, so testing the single
    candidate [b:a] decides divisibility.
    """
    if a.d == 0:
        raise ZeroDivisorIdeal("division by the zero ideal")
    if b.d == 0:
        return NAT_ZERO
    q = nat_quotient(b, a)
    if nat_product(a, q) == b:
        return q
    return None


def nat_is_subtractive(i):
    return i.ex == () and i.c == 0


def nat_is_prime(i):
    from .primes import is_prime_int

    if i.d == 0:
        return True
    if i == NAT_FULL:
        return False
    if i == NAT_MAX:
        return True
    return i.c == 0 and i.ex == () and is_prime_int(i.d)


def nat_is_maximal(i):
    return i == NAT_MAX


def nat_between(m):
    """A verified ideal strictly between m*m and m, or None.

    Any ideal strictly between must contain some member x of m outside m*m,
    and m*m + (x) is then itself strictly between, so scanning those x
    decides existence.
    """
    m2 = nat_product(m, m)
    for x in m.members_below(m2.c if m2.c else m2.d):
        if x and not m2.contains(x):
            cand = nat_sum(m2, from_generators([x]))
            if cand != m2 and cand != m and nat_contains(m, cand):
                return cand
    return None


def nat_scale(i, t):
    """The ideal t*i for a positive integer t."""
    if t <= 0:
        raise ValueError("positive scale required")
    if i.d == 0 or t == 1:
        return i
    return NatIdeal(i.d * t, i.c * t, tuple(e * t for e in i.ex))


def nat_unscale(i, t):
    """The ideal i/t when every member is divisible by t."""
    if t <= 0:
        raise ValueError("positive scale required")
    if i.d == 0 or t == 1:
        return i
    if i.d % t or i.c % t or any(e % t for e in i.ex):
        raise ValueError("members are not all divisible")
    return NatIdeal(i.d // t, i.c // t, tuple(e // t for e in i.ex))
