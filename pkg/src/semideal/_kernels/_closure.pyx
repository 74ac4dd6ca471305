# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled additive-closure kernel: shift-or doubling over 64-bit words.

Same algorithm as the pure fallback (one doubling ladder per generator), but
the shifted OR runs over a packed uint64 buffer instead of allocating fresh
big ints for every shift.
"""

import sys

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport uint64_t
from libc.string cimport memset


def additive_closure(gens, long limit):
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    gs = sorted({int(g) for g in gens})
    for g in gs:
        if g <= 0:
            raise ValueError("generators must be positive")
    cdef Py_ssize_t nbits = limit + 1
    cdef Py_ssize_t nwords = (nbits + 63) >> 6
    cdef uint64_t* w = <uint64_t*> PyMem_Malloc(nwords * sizeof(uint64_t))
    if w == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, ws
    cdef long shift
    cdef int bs
    cdef uint64_t v, top_mask
    try:
        memset(w, 0, nwords * sizeof(uint64_t))
        w[0] = 1
        top_mask = <uint64_t> 0xFFFFFFFFFFFFFFFFULL
        if nbits & 63:
            top_mask = ((<uint64_t> 1) << (nbits & 63)) - 1
        for g in gs:
            if g > limit:
                continue
            shift = g
            while shift <= limit:
                ws = shift >> 6
                bs = shift & 63
                for i in range(nwords - 1, ws - 1, -1):
                    v = w[i - ws] << bs
                    if bs != 0 and i - ws - 1 >= 0:
                        v |= w[i - ws - 1] >> (64 - bs)
                    w[i] |= v
                w[nwords - 1] &= top_mask
                shift <<= 1
        if sys.byteorder == "little":
            return int.from_bytes((<unsigned char*> w)[: nwords * sizeof(uint64_t)], "little")
        out = 0
        for i in range(nwords - 1, -1, -1):
            out = (out << 64) | w[i]
        return out
    finally:
        PyMem_Free(w)
