"""Exact ideal arithmetic in Z[w] where w*w = -5.

Nonzero ideals are kept in Hermite normal form g*(a*Z + (b+w)*Z) with g >= 1,
a >= 1, 0 <= b < a and a | b*b + 5; the zero ideal is the g = 0 marker. The
norm is g*g*a. All operations are integer-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyIdeal, InternalError, NotPrime
from .primes import factorint, is_prime_int, sqrt_mod_prime

def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


@dataclass(frozen=True, order=True)
class QuadIdeal:
    g: int
    a: int
    b: int

    def is_zero(self):
        return self.g == 0

    def norm(self):
        return self.g * self.g * self.a


QI_ZERO = QuadIdeal(0, 1, 0)
QI_ONE = QuadIdeal(1, 1, 0)


def qi_principal_int(n):
    """The ideal (n) for a rational integer n >= 0."""
    if n == 0:
        return QI_ZERO
    return QuadIdeal(n, 1, 0)


def _hnf2(rows):
    """HNF basis ((alpha,0),(beta,delta)) of the module spanned by rows.

    Rows are (x, y) coordinates in the 1, w basis. Raises InternalError if the
    module has rank < 2 (a nonzero ideal always has rank 2).
    """
    bx, by = 0, 0
    for x, y in rows:
        if y == 0:
            continue
        if by == 0:
            bx, by = x, y
        else:
            g, u, v = _xgcd(by, y)
            bx, by = u * bx + v * x, g
    if by == 0:
        raise InternalError("module has rank < 2")
    if by < 0:
        bx, by = -bx, -by
    ax = 0
    for x, y in rows:
        ax = math.gcd(ax, x - (y // by) * bx)
    if ax == 0:
        raise InternalError("module has rank < 2")
    return ax, bx % ax, by


def _from_hnf(alpha, beta, delta):
    if alpha % delta or beta % delta:
        raise InternalError("module is not an ideal")
    a = alpha // delta
    b = (beta // delta) % a
    if (b * b + 5) % a:
        raise InternalError("module is not an ideal")
    return QuadIdeal(delta, a, b)


def qi_normalize(elements):
    """Ideal generated by elements given as (x, y) pairs meaning x + y*w."""
    rows = []
    for x, y in elements:
        rows.append((x, y))
        rows.append((-5 * y, x))  # w * (x + y*w)
    rows = [r for r in rows if r != (0, 0)]
    if not rows:
        return QI_ZERO
    return _from_hnf(*_hnf2(rows))


def qi_mul(i, j):
    if i.is_zero() or j.is_zero():
        return QI_ZERO
    rows = [
        (i.a * j.a, 0),
        (i.a * j.b, i.a),
        (j.a * i.b, j.a),
        (i.b * j.b - 5, i.b + j.b),
    ]
    alpha, beta, delta = _hnf2(rows)
    return _from_hnf(i.g * j.g * alpha, i.g * j.g * beta, i.g * j.g * delta)


def qi_add(i, j):
    if i.is_zero():
        return j
    if j.is_zero():
        return i
    rows = [
        (i.g * i.a, 0),
        (i.g * i.b, i.g),
        (j.g * j.a, 0),
        (j.g * j.b, j.g),
    ]
    return _from_hnf(*_hnf2(rows))


def qi_pow(i, k):
    if k < 0:
        raise ValueError("negative ideal power")
    out = QI_ONE
    base = i
    while k:
        if k & 1:
            out = qi_mul(out, base)
        base = qi_mul(base, base)
        k >>= 1
    return out


def qi_conj(i):
    if i.is_zero():
        return i
    return QuadIdeal(i.g, i.a, (-i.b) % i.a)


def qi_contains(i, j):
    """True iff j is a subset of i."""
    return qi_add(i, j) == i


def qi_member(i, x, y):
    """True iff the element x + y*w lies in the ideal i."""
    if i.is_zero():
        return x == 0 and y == 0
    g, a, b = i.g, i.a, i.b
    if y % g or (x - (y // g) * (g * b)) % (g * a):
        return False
    return True


def qi_divide(num, den):
    """Exact quotient q with den*q == num, or None.

    Uses den * conj(den) = (norm(den)): the candidate is num * conj(den)
    divided by the norm, then verified by multiplying back.
    """
    if den.is_zero():
        raise EmptyIdeal("division by the zero ideal")
    if num.is_zero():
        return QI_ZERO
    p = qi_mul(num, qi_conj(den))
    n = den.norm()
    if p.g % n:
        return None
    q = QuadIdeal(p.g // n, p.a, p.b)
    if qi_mul(den, q) != num:
        return None
    return q


def qi_prime_split(p):
    """The primes over the rational prime p, certified before returning.

    Ramified (p in {2, 5}) and inert p give a single ideal; split p gives the
    conjugate pair ordered by b. Inertness is recognizable by norm p*p.
    """
    if not is_prime_int(p):
        raise NotPrime(f"{p} is not a rational prime")
    if p == 2:
        primes = (QuadIdeal(1, 2, 1),)
    elif p == 5:
        primes = (QuadIdeal(1, 5, 0),)
    else:
        r = sqrt_mod_prime(-5, p)
        if r is None:
            primes = (qi_principal_int(p),)
        else:
            primes = tuple(QuadIdeal(1, p, b) for b in sorted((r, p - r)))
    _certify_split(p, primes)
    return primes


def _certify_split(p, primes):
    principal = qi_principal_int(p)
    if len(primes) == 2:
        q1, q2 = primes
        ok = (
            q1 != q2
            and q1.norm() == p
            and q2.norm() == p
            and qi_mul(q1, q2) == principal
            and qi_conj(q1) == q2
        )
    elif primes[0].norm() == p:
        (q,) = primes
        ok = qi_mul(q, q) == principal
    else:
        (q,) = primes
        ok = q == principal and q.norm() == p * p
    if not ok:
        raise InternalError("prime splitting certificate failed")


def prime_for_root(p, b):
    """The prime ideal labelled (p, b); b None means the inert prime (p)."""
    if b is None:
        return qi_principal_int(p)
    return QuadIdeal(1, p, b)


def qi_factor(i):
    """Factor a nonzero ideal into prime labels {(p, b|None): exponent}.

    The composition of the result is re-multiplied and compared with i before
    returning, so a successful call is self-certifying.
    """
    if i.is_zero():
        raise EmptyIdeal("cannot factor the zero ideal")
    out = {}

    def bump(label, e):
        out[label] = out.get(label, 0) + e

    for p, e in factorint(i.g).items() if i.g > 1 else ():
        primes = qi_prime_split(p)
        if len(primes) == 2:
            bump((p, primes[0].b), e)
            bump((p, primes[1].b), e)
        elif primes[0].norm() == p:
            bump((p, primes[0].b), 2 * e)
        else:
            bump((p, None), e)
    for p, e in factorint(i.a).items() if i.a > 1 else ():
        r = i.b % p
        if (r * r + 5) % p:
            raise InternalError("primitive part divisible by an inert prime")
        bump((p, r), e)
    composed = QI_ONE
    for (p, b), e in sorted(out.items(), key=lambda kv: (kv[0][0], -1 if kv[0][1] is None else kv[0][1])):
        composed = qi_mul(composed, qi_pow(prime_for_root(p, b), e))
    if composed != i:
        raise InternalError("factorization did not compose back")
    return out


def enumerate_ideals(max_norm):
    """All nonzero ideals of norm <= max_norm, in a deterministic order."""
    out = []
    for a in range(1, max_norm + 1):
        roots = [b for b in range(a) if (b * b + 5) % a == 0]
        g = 1
        while g * g * a <= max_norm:
            for b in roots:
                out.append(QuadIdeal(g, a, b))
            g += 1
    out.sort(key=lambda q: (q.norm(), q.a, q.b))
    return out
