"""Finite integer sets, normal form and structural classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from pathlib import Path
from typing import Iterable, Iterator, Union

import numpy as np

from .errors import (
    DuplicateElement,
    EmptyInput,
    NotNormalForm,
    Overflow,
    ParseError,
    TooSmall,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_int64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise Overflow(f"{what} {value} does not fit in a signed 64-bit integer")
    return value


class IntSet:
    """Immutable finite set of distinct int64 values in increasing order.

    Elements live in a read-only numpy array, so sets with tens of millions
    of elements (large sumsets) stay compact. Build instances with
    :func:`make_set`; the constructor validates but never sorts or dedups.
    """

    __slots__ = ("_a",)

    def __init__(self, elements: Iterable[int]):
        arr = _as_int64_array(elements)
        if arr.size == 0:
            raise EmptyInput("an IntSet needs at least one element")
        if arr.size > 1:
            d = np.diff(arr)
            if not (d > 0).all():
                bad = int(arr[1:][d <= 0][0])
                if (d == 0).any():
                    raise DuplicateElement(int(arr[1:][d == 0][0]))
                raise ValueError(f"elements not increasing at {bad}")
        arr.setflags(write=False)
        self._a = arr

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "IntSet":
        # arr is already int64, strictly increasing and nonempty
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        obj._a = arr
        return obj

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def elements(self) -> tuple:
        return tuple(self._a.tolist())

    @property
    def k(self) -> int:
        return int(self._a.size)

    @property
    def min(self) -> int:
        return int(self._a[0])

    @property
    def max(self) -> int:
        return int(self._a[-1])

    @property
    def diameter(self) -> int:
        return self.max - self.min

    def tolist(self) -> list:
        return self._a.tolist()

    def __len__(self) -> int:
        return int(self._a.size)

    def __iter__(self) -> Iterator[int]:
        return iter(self._a.tolist())

    def __contains__(self, x) -> bool:
        i = np.searchsorted(self._a, x)
        return bool(i < self._a.size and self._a[i] == x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSet):
            return NotImplemented
        return self._a.size == other._a.size and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash(self._a.tobytes())

    def __lt__(self, other: "IntSet") -> bool:
        return self.elements < other.elements

    def __repr__(self) -> str:
        if self._a.size > 12:
            head = ",".join(map(str, self._a[:5].tolist()))
            tail = ",".join(map(str, self._a[-3:].tolist()))
            return f"IntSet{{{head},...,{tail}}} (k={self.k})"
        return "IntSet{" + ",".join(map(str, self._a.tolist())) + "}"


def _as_int64_array(values) -> np.ndarray:
    if isinstance(values, np.ndarray) and values.dtype.kind in "iu":
        if values.dtype == np.uint64 and values.size and values.max() > INT64_MAX:
            raise Overflow(f"value {int(values.max())} does not fit in int64")
        return np.array(values, dtype=np.int64).ravel()
    vals = [int(v) for v in values]
    for v in vals:
        check_int64(v)
    return np.array(vals, dtype=np.int64)


def make_set(values: Iterable[int]) -> IntSet:
    """Build an :class:`IntSet` from arbitrary-order values.

    Duplicates are rejected rather than merged.
    """
    arr = _as_int64_array(values)
    if arr.size == 0:
        raise EmptyInput("cannot build a set from no values")
    arr = np.sort(arr, kind="stable")
    if arr.size > 1:
        dup = arr[1:][np.diff(arr) == 0]
        if dup.size:
            raise DuplicateElement(int(dup[0]))
    return IntSet._trusted(arr)


def parse_set_literal(text: str) -> IntSet:
    """Parse ``"0, 2, 3, 5"`` into an IntSet."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise EmptyInput("empty set literal")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"not a comma-separated integer list: {text!r}") from None
    return make_set(values)


def read_set_file(path: Union[str, Path]) -> IntSet:
    """Read a set stored as one integer per line; blank lines are skipped."""
    values = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise ParseError(f"{path}:{lineno}: not an integer: {line!r}") from None
    return make_set(values)


def _require_pair(A: IntSet, what: str) -> None:
    if A.k < 2:
        raise TooSmall(f"{what} needs at least two elements, got {A!r}")


def diff_gcd(A: IntSet) -> int:
    """gcd of the differences a_i - a_0."""
    _require_pair(A, "diff_gcd")
    a0 = A.min
    return reduce(math.gcd, (a - a0 for a in A.tolist()[1:]))


@dataclass(frozen=True)
class NormalizedSet:
    """A normal-form set and the affine map back to the original.

    ``original == {base + dilation * x for x in normal}``.
    """

    normal: IntSet
    base: int
    dilation: int

    def denormalize(self) -> IntSet:
        arr = self.normal.array.astype(object) * self.dilation + self.base
        return make_set(arr.tolist())


def normalize(A: IntSet) -> NormalizedSet:
    _require_pair(A, "normalize")
    d = diff_gcd(A)
    base = A.min
    # differences may exceed int64 before division, so do this in Python ints
    normal = IntSet._trusted(np.array([(a - base) // d for a in A.tolist()], dtype=np.int64))
    return NormalizedSet(normal, base, d)


def translate(A: IntSet, c: int) -> IntSet:
    check_int64(A.min + c, "translated minimum")
    check_int64(A.max + c, "translated maximum")
    return IntSet._trusted(A.array + np.int64(c))


def reflect(A: IntSet) -> IntSet:
    """Return ``{max(A) + min(A) - a : a in A}``."""
    s = A.max + A.min
    check_int64(s, "max + min")
    check_int64(s - A.max, "reflected minimum")
    check_int64(s - A.min, "reflected maximum")
    return IntSet._trusted((np.int64(s) - A.array)[::-1])


def is_ap(A: IntSet) -> tuple:
    """Return ``(True, difference)`` for an arithmetic progression, else ``(False, None)``.

    Singletons and pairs are progressions; a singleton has difference 0.
    """
    if A.k == 1:
        return True, 0
    d = np.diff(A.array)
    if (d == d[0]).all():
        return True, int(d[0])
    return False, None


def minimal_ap_cover_length(A: IntSet) -> int:
    _require_pair(A, "minimal_ap_cover_length")
    return A.diameter // diff_gcd(A) + 1


# -- structure classes --------------------------------------------------------


@dataclass(frozen=True)
class FullInterval:
    k: int

    def to_dict(self) -> dict:
        return {"kind": "FullInterval", "k": self.k}


@dataclass(frozen=True)
class IntervalMinusOne:
    k: int
    i: int

    def to_dict(self) -> dict:
        return {"kind": "IntervalMinusOne", "k": self.k, "i": self.i}


@dataclass(frozen=True)
class IntervalMinusTwo:
    k: int
    i: int
    j: int

    def to_dict(self) -> dict:
        return {"kind": "IntervalMinusTwo", "k": self.k, "i": self.i, "j": self.j}


@dataclass(frozen=True)
class Other:
    diameter: int

    def to_dict(self) -> dict:
        return {"kind": "Other", "diameter": self.diameter}


StructureClass = Union[FullInterval, IntervalMinusOne, IntervalMinusTwo, Other]

_STRUCTURES = {
    "FullInterval": FullInterval,
    "IntervalMinusOne": IntervalMinusOne,
    "IntervalMinusTwo": IntervalMinusTwo,
    "Other": Other,
}


def structure_from_dict(d: dict) -> StructureClass:
    d = dict(d)
    return _STRUCTURES[d.pop("kind")](**d)


def as_normal_form(N: Union[NormalizedSet, IntSet]) -> IntSet:
    """Return the underlying set, checking min 0 and gcd 1."""
    S = N.normal if isinstance(N, NormalizedSet) else N
    if S.min != 0:
        raise NotNormalForm(f"{S!r} does not start at 0")
    if S.k >= 2 and diff_gcd(S) != 1:
        raise NotNormalForm(f"{S!r} has difference gcd {diff_gcd(S)}")
    return S


def classify_structure(N: Union[NormalizedSet, IntSet]) -> StructureClass:
    """Classify a normal-form set by its diameter and its holes."""
    S = as_normal_form(N)
    k, diam = S.k, S.max
    if diam == k - 1:
        return FullInterval(k)
    if diam == k:
        (i,) = sorted(set(range(diam + 1)).difference(S.tolist()))
        return IntervalMinusOne(k, i)
    if diam == k + 1:
        i, j = sorted(set(range(diam + 1)).difference(S.tolist()))
        return IntervalMinusTwo(k, i, j)
    return Other(diam)
