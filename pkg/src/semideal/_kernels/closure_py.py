"""Pure Python additive-closure kernel.

Computes a membership bitmask for the additive submonoid of the naturals
generated by ``gens``, up to ``limit`` inclusive (bit i set iff i is a sum of
generators; bit 0 is always set). Uses shift-or doubling on a big int: one
pass per generator suffices because addition commutes, and the doubled shifts
g, 2g, 4g, ... cover every multiple of g within the window.
"""


def additive_closure(gens, limit):
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    full = (1 << (limit + 1)) - 1
    r = 1
    for g in sorted({int(g) for g in gens}):
        if g <= 0:
            raise ValueError("generators must be positive")
        shift = g
        while shift <= limit:
            r |= (r << shift) & full
            shift <<= 1
    return r
