"""numba bit-vector kernels for large sumsets.

Bit ``p`` of a word array lives in ``words[p >> 6]`` at position ``p & 63``.
All offsets are zero-based; callers shift windows back afterwards.
"""

import numpy as np
from numba import njit, uint64


@njit(cache=True)
def words_from_offsets(offs, nbits):
    out = np.zeros((nbits + 63) >> 6, dtype=np.uint64)
    for p in offs:
        out[p >> 6] |= uint64(1) << uint64(p & 63)
    return out


@njit(cache=True)
def scatter_add(a, b, nbits):
    """Set bit a+b for every pair; cost |a|*|b|."""
    out = np.zeros((nbits + 63) >> 6, dtype=np.uint64)
    for x in a:
        for y in b:
            s = x + y
            out[s >> 6] |= uint64(1) << uint64(s & 63)
    return out


@njit(cache=True, inline="always")
def _extract(t, p):
    # the 64 bits of t starting at bit position p (p may be negative)
    nw = t.shape[0]
    if p <= -64:
        return uint64(0)
    if p < 0:
        return t[0] << uint64(-p)
    q = p >> 6
    if q >= nw:
        return uint64(0)
    r = p & 63
    v = t[q] >> uint64(r)
    if r != 0 and q + 1 < nw:
        v |= t[q + 1] << uint64(64 - r)
    return v


@njit(cache=True)
def shift_or_add(offs, t, tbits, nbits):
    """Words of ``offs + T`` where T is given by its word array ``t``.

    Works one output word at a time and stops trying offsets once the word
    is full, so dense results cost far less than |offs| * words.
    ``offs`` must be sorted ascending.
    """
    nwo = (nbits + 63) >> 6
    out = np.zeros(nwo, dtype=np.uint64)
    full = ~uint64(0)
    n = offs.shape[0]
    start = 0
    end = 0
    for w in range(nwo):
        lo = w << 6
        hi = lo + 63
        target = full
        if hi >= nbits:
            hi = nbits - 1
            target = (uint64(1) << uint64(nbits - lo)) - uint64(1)
        # relevant offsets s satisfy lo - (tbits - 1) <= s <= hi
        while start < n and offs[start] < lo - (tbits - 1):
            start += 1
        while end < n and offs[end] <= hi:
            end += 1
        acc = uint64(0)
        for idx in range(start, end):
            acc |= _extract(t, lo - offs[idx])
            if acc == target:
                break
        out[w] = acc & target
    return out
