"""Classified prime spectra and Krull dimension.

Primes are addressed by small symbolic labels so that factorizations and CLI
output are stable: numeric labels p for the principal primes of the gcd-like
instances and n0, MAX for the n0 ideal of everything except 1, t and u for
the one nonzero prime of dvs and lagrassa, and (p, b) pairs for quad5 where b
is the HNF coefficient of the degree-one prime over p (None for inert p).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import natideal as nat
from .errors import UnknownPrime
from .ideals import Ideal, ideal_contains, ideal_equals, zero_ideal
from .primes import primes_up_to
from .quadratic import prime_for_root, qi_prime_split


@dataclass(frozen=True)
class PrimeLabel:
    instance: object
    kind: str  # "numeric" | "max" | "t" | "u" | "quad"
    p: int | None = None
    b: int | None = None

    def sort_key(self):
        order = {"numeric": 0, "quad": 0, "max": 1, "t": 0, "u": 0}
        return (order[self.kind], self.p or 0, -1 if self.b is None else self.b)

    def text(self):
        if self.kind == "numeric":
            return str(self.p)
        if self.kind == "max":
            return "MAX"
        if self.kind in ("t", "u"):
            return self.kind
        if self.b is None or self.p in (2, 5):
            return f"P{self.p}"
        return f"P{self.p}[{self.b}]"

    def ideal(self):
        inst = self.instance
        kind = self.kind
        if kind == "numeric":
            if inst.kind == "n0":
                return Ideal(inst, nat.NatIdeal(self.p, 0, ()))
            return Ideal(inst, self.p)
        if kind == "max":
            return Ideal(inst, nat.NAT_MAX)
        if kind == "t":
            return Ideal(inst, 1)
        if kind == "u":
            return Ideal(inst, "u")
        return Ideal(inst, prime_for_root(self.p, self.b))


def spectrum(inst, bound=10):
    """The classified prime labels, materialized up to bound where infinite."""
    kind = inst.kind
    if kind == "n0":
        labels = [PrimeLabel(inst, "numeric", p) for p in primes_up_to(bound)]
        labels.append(PrimeLabel(inst, "max"))
        return labels
    if kind == "gcd":
        return [PrimeLabel(inst, "numeric", p) for p in primes_up_to(bound)]
    if kind == "gcd-supported":
        return [PrimeLabel(inst, "numeric", p) for p in inst.support]
    if kind == "dvs":
        return [PrimeLabel(inst, "t")]
    if kind == "lagrassa":
        return [PrimeLabel(inst, "u")]
    labels = []
    for p in primes_up_to(bound):
        for q in qi_prime_split(p):
            labels.append(PrimeLabel(inst, "quad", p, q.b if q.norm() == p else None))
    return labels


def label_from_text(inst, text):
    """Parse a label printed by text(); integers mean numeric primes."""
    for lab in spectrum(inst, 101):
        if lab.text() == text:
            return lab
    raise UnknownPrime(f"unknown prime label {text!r} for {inst.id}")


def krull_dimension(inst, bound=7):
    """Longest strict chain of classified primes starting at the zero ideal."""
    chain = [zero_ideal(inst)] + [lab.ideal() for lab in spectrum(inst, bound)]
    n = len(chain)
    below = [
        [
            j != i and ideal_contains(chain[j], chain[i]) and not ideal_equals(chain[i], chain[j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo = {}

    def depth(i):
        if i not in memo:
            memo[i] = max((depth(j) + 1 for j in range(n) if below[i][j]), default=0)
        return memo[i]

    return max(depth(i) for i in range(n))
