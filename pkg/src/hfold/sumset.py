"""Exact h-fold sumsets over a zero-based bit-vector window.

Small windows use Python integers as bitsets. Larger ones go through the
numba kernels in :mod:`hfold._kernels`, which are imported lazily so that
enumeration sweeps over tiny sets never pay the JIT cost.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import IntSet, check_int64
from .errors import InvalidH, TooLarge

#: windows up to this many bits are handled with Python int bitsets
SMALL_WINDOW_BITS = 1 << 16
#: refuse bit-vector windows above this size (2 GiB of words)
MAX_WINDOW_BITS = 1 << 34
#: up to this h, hA is built as A + A + ... + A; above it by binary doubling
SEQUENTIAL_MAX_H = 32


@dataclass(frozen=True)
class SumsetResult:
    h: int
    source: IntSet
    elements: IntSet

    @property
    def cardinality(self) -> int:
        return self.elements.k


# -- small windows: Python int bitsets ----------------------------------------


def _mask_from_offsets(offs: np.ndarray, nbits: int) -> int:
    bits = np.zeros(nbits, dtype=np.uint8)
    bits[offs] = 1
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _offsets_from_mask(mask: int, nbits: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((nbits + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:nbits]).astype(np.int64)


def _mask_add(small_offs, big_mask: int) -> int:
    acc = 0
    for s in small_offs:
        acc |= big_mask << s
    return acc


def fold_masks(offsets, hmax: int) -> list:
    """Bitmasks of ``hA - h*min(A)`` for h = 1..hmax (pure Python).

    ``offsets`` are the zero-based elements of A. Used by the sweeps, where
    sets are tiny and numpy overhead would dominate.
    """
    base = 0
    for o in offsets:
        base |= 1 << o
    masks = [base]
    cur = base
    for _ in range(hmax - 1):
        cur = _mask_add(offsets, cur)
        masks.append(cur)
    return masks


# -- large windows: numba word arrays -----------------------------------------


class _Bits:
    """Zero-based bitset stored as uint64 words, with lazily derived views."""

    __slots__ = ("words", "nbits", "_offs")

    def __init__(self, words, nbits, offs=None):
        self.words = words
        self.nbits = nbits
        self._offs = offs

    @classmethod
    def from_offsets(cls, offs: np.ndarray, nbits: int) -> "_Bits":
        from ._kernels import words_from_offsets

        return cls(words_from_offsets(offs, nbits), nbits, offs)

    @property
    def offsets(self) -> np.ndarray:
        if self._offs is None:
            raw = np.unpackbits(self.words.view(np.uint8), bitorder="little")
            self._offs = np.flatnonzero(raw[: self.nbits]).astype(np.int64)
        return self._offs

    def count(self) -> int:
        if self._offs is not None:
            return int(self._offs.size)
        return int(np.bitwise_count(self.words).sum())


def _bits_add(S: _Bits, T: _Bits) -> _Bits:
    from ._kernels import scatter_add, shift_or_add

    nbits = S.nbits + T.nbits - 1
    nwords = (nbits + 63) >> 6
    cs, ct = S.count(), T.count()
    if max(cs, ct) <= nwords:
        # sparse operands: touching each pair is cheaper than sweeping words
        return _Bits(scatter_add(S.offsets, T.offsets, nbits), nbits)
    small, big = (S, T) if cs <= ct else (T, S)
    return _Bits(shift_or_add(small.offsets, big.words, big.nbits, nbits), nbits)


# -- public API ---------------------------------------------------------------


def _window(lo: int, hi: int) -> int:
    check_int64(lo, "sumset minimum")
    check_int64(hi, "sumset maximum")
    nbits = hi - lo + 1
    if nbits > MAX_WINDOW_BITS:
        raise TooLarge(
            f"bit-vector window of {nbits} bits exceeds MAX_WINDOW_BITS={MAX_WINDOW_BITS}"
        )
    return nbits


def add_sets(A: IntSet, B: IntSet) -> IntSet:
    """Return ``{a + b : a in A, b in B}``."""
    lo, hi = A.min + B.min, A.max + B.max
    nbits = _window(lo, hi)
    a0 = A.array - A.array[0]
    b0 = B.array - B.array[0]
    if nbits <= SMALL_WINDOW_BITS:
        small, big = (a0, b0) if a0.size <= b0.size else (b0, a0)
        mask = _mask_add(small.tolist(), _mask_from_offsets(big, big[-1] + 1))
        offs = _offsets_from_mask(mask, nbits)
    else:
        S = _Bits.from_offsets(a0, A.diameter + 1)
        T = _Bits.from_offsets(b0, B.diameter + 1)
        offs = _bits_add(S, T).offsets
    return IntSet._trusted(offs + np.int64(lo))


def _check_h(h) -> int:
    if isinstance(h, bool) or not isinstance(h, (int, np.integer)) or h < 1:
        raise InvalidH(f"h must be a positive integer, got {h!r}")
    return int(h)


def _fold_offsets(A: IntSet, h: int):
    """Bitset of ``hA - h*min(A)`` (an int mask or ``_Bits``) and its window size."""
    nbits = _window(h * A.min, h * A.max)
    a0 = A.array - A.array[0]
    if nbits <= SMALL_WINDOW_BITS:
        offs = a0.tolist()
        if h <= SEQUENTIAL_MAX_H:
            mask = fold_masks(offs, h)[-1]
        else:
            mask = _mask_double(offs, h)
        return mask, nbits
    if h <= SEQUENTIAL_MAX_H:
        base = _Bits.from_offsets(a0, A.diameter + 1)
        acc = base
        for _ in range(h - 1):
            acc = _bits_add(acc, base)
        return acc, nbits
    power = _Bits.from_offsets(a0, A.diameter + 1)
    acc = None
    n = h
    while True:
        if n & 1:
            acc = power if acc is None else _bits_add(acc, power)
        n >>= 1
        if not n:
            return acc, nbits
        power = _bits_add(power, power)


def _mask_double(offs, h: int) -> int:
    power = 0
    for o in offs:
        power |= 1 << o
    acc = None
    while True:
        if h & 1:
            acc = power if acc is None else _mask_add(_offsets_of_int(acc), power)
        h >>= 1
        if not h:
            return acc
        power = _mask_add(_offsets_of_int(power), power)


def _offsets_of_int(mask: int) -> list:
    return _offsets_from_mask(mask, mask.bit_length()).tolist()


def h_fold(A: IntSet, h: int) -> SumsetResult:
    """Exact ``hA``: all sums of h elements of A, repetitions allowed.

    h=1 returns A itself. Up to ``SEQUENTIAL_MAX_H`` the set is built by
    adding A repeatedly (the word kernel then iterates over the small set
    A only); beyond that by binary doubling, ``(m+n)A = mA + nA``.
    """
    h = _check_h(h)
    if h == 1:
        return SumsetResult(1, A, A)
    lo = h * A.min
    rep, nbits = _fold_offsets(A, h)
    if isinstance(rep, int):
        offs = _offsets_from_mask(rep, nbits)
    else:
        offs = rep.offsets
    return SumsetResult(h, A, IntSet._trusted(offs + np.int64(lo)))


def h_fold_cardinality(A: IntSet, h: int) -> int:
    """``|hA|`` without materializing the elements."""
    h = _check_h(h)
    if h == 1:
        return A.k
    rep, _ = _fold_offsets(A, h)
    if isinstance(rep, int):
        return rep.bit_count()
    return rep.count()
