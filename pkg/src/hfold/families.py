"""Structured set families with closed-form sumset sizes.

Each family is a frozen dataclass naming a set by its holes:

* ``P1(k, i)``: ``[0, k] \\ {i}``
* ``P2(k, i)``: ``[0, k+1] \\ {i, i+1}``
* ``P3(k, i)``: ``[0, k+1] \\ {i, i+2}``
* ``P4(k, i, j)``: ``[0, k+1] \\ {i, j}`` with ``j >= i + 3``
* ``L2(i, j)``: ``[0, i-1] ∪ [i+1, j]``
* ``L3(i, j)``: ``[0, i-1] ∪ [i+2, j]``

Families overlap (for instance ``P4(k, i, k+1)`` is ``P1(k, i)``); that is
intentional and the sweeps cross-check the overlaps.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from typing import Iterator, Union

from .core import IntSet, as_normal_form, make_set
from .errors import BadParameters, UnsupportedFamily, UnsupportedH


@dataclass(frozen=True)
class P1:
    k: int
    i: int

    def validate(self):
        if self.k < 4:
            raise BadParameters(f"P1 needs k >= 4, got {self}")
        if not 1 <= self.i <= self.k:
            raise BadParameters(f"P1 needs 1 <= i <= k, got {self}")


@dataclass(frozen=True)
class P2:
    k: int
    i: int

    def validate(self):
        if self.k < 5:
            raise BadParameters(f"P2 needs k >= 5, got {self}")
        if not 1 <= self.i <= self.k:
            raise BadParameters(f"P2 needs 1 <= i <= k, got {self}")


@dataclass(frozen=True)
class P3:
    k: int
    i: int

    def validate(self):
        if self.k < 5:
            raise BadParameters(f"P3 needs k >= 5, got {self}")
        if not 1 <= self.i <= self.k - 1:
            raise BadParameters(f"P3 needs 1 <= i <= k-1, got {self}")


@dataclass(frozen=True)
class P4:
    k: int
    i: int
    j: int

    def validate(self):
        if self.k < 5:
            raise BadParameters(f"P4 needs k >= 5, got {self}")
        if not 1 <= self.i <= self.k - 2:
            raise BadParameters(f"P4 needs 1 <= i <= k-2, got {self}")
        if not self.i + 3 <= self.j <= self.k + 1:
            raise BadParameters(f"P4 needs i+3 <= j <= k+1, got {self}")


@dataclass(frozen=True)
class L2:
    i: int
    j: int

    def validate(self):
        if self.i < 2 or self.j < self.i + 2:
            raise BadParameters(f"L2 needs i >= 2 and j >= i+2, got {self}")


@dataclass(frozen=True)
class L3:
    i: int
    j: int

    def validate(self):
        if self.i < 2 or self.j < self.i + 3:
            raise BadParameters(f"L3 needs i >= 2 and j >= i+3, got {self}")


FamilyId = Union[P1, P2, P3, P4, L2, L3]
FAMILY_KINDS = {"P1": P1, "P2": P2, "P3": P3, "P4": P4, "L2": L2, "L3": L3}


def family_name(f: FamilyId) -> str:
    return type(f).__name__ + "(" + ",".join(map(str, astuple(f))) + ")"


def _holes(f: FamilyId) -> tuple:
    if isinstance(f, P1):
        return f.k, (f.i,)
    if isinstance(f, P2):
        return f.k + 1, (f.i, f.i + 1)
    if isinstance(f, P3):
        return f.k + 1, (f.i, f.i + 2)
    if isinstance(f, P4):
        return f.k + 1, (f.i, f.j)
    if isinstance(f, L2):
        return f.j, (f.i,)
    if isinstance(f, L3):
        return f.j, (f.i, f.i + 1)
    raise UnsupportedFamily(f"unknown family {f!r}")


def build(f: FamilyId) -> IntSet:
    """The literal set named by ``f``."""
    f.validate()
    top, holes = _holes(f)
    return as_normal_form(make_set(x for x in range(top + 1) if x not in holes))


def _check_h(h: int) -> None:
    if h < 2:
        raise UnsupportedH(f"closed forms need h >= 2, got h={h}")


def predict_cardinality(f: FamilyId, h: int) -> int:
    """Closed-form ``|h * build(f)|``."""
    f.validate()
    _check_h(h)
    if isinstance(f, P1):
        k, i = f.k, f.i
        if i == k:
            return h * k - h + 1
        if i in (1, k - 1):
            return h * k
        return h * k + 1
    if isinstance(f, P2):
        k, i = f.k, f.i
        if i == k:
            return h * k - h + 1
        if i in (1, k - 1):
            return h * k + h - 1
        if h >= 3:
            return h * k + h + 1
        return 2 * k + 2 if i in (2, k - 2) else 2 * k + 3
    if isinstance(f, P3):
        k, i = f.k, f.i
        if i == k - 1:
            return h * k
        if i in (1, k - 2):
            return h * k + h - 1
        return h * k + h + 1
    if isinstance(f, P4):
        k, i, j = f.k, f.i, f.j
        if i == 1:
            if j == k + 1:
                return h * k
            if j == k:
                return h * k + h - 1
            return h * k + h
        if i == k - 2:
            # j >= i + 3 forces j = k + 1 here
            return h * k + 1
        if j == k + 1:
            return h * k + 1
        if j == k:
            return h * k + h
        return h * k + h + 1
    lo, hi = predict_sumset_interval(f, h)
    return hi - lo + 1


def predict_sumset_interval(f: FamilyId, h: int) -> tuple:
    """``hA = [0, h*j]`` as the pair ``(0, h*j)``, for L2 (h >= 2) and L3 (h >= 3)."""
    if not isinstance(f, (L2, L3)):
        raise UnsupportedFamily(f"only L2 and L3 have an interval sumset, got {f!r}")
    f.validate()
    _check_h(h)
    if isinstance(f, L3) and h < 3:
        raise UnsupportedH("L3 sumsets are only known to be intervals for h >= 3")
    return 0, h * f.j


def pair_family(k: int, i: int, j: int) -> FamilyId:
    """The P2/P3/P4 member for ``[0, k+1] \\ {i, j}``."""
    gap = j - i
    if gap == 1:
        return P2(k, i)
    if gap == 2:
        return P3(k, i)
    return P4(k, i, j)


def iter_families(
    kind: str,
    k_range=range(5, 13),
    l_i_range=range(2, 9),
    l_span: int = 8,
) -> Iterator[FamilyId]:
    """Every valid member of one family kind within the given ranges.

    ``k_range`` applies to P1-P4; L2/L3 use ``i in l_i_range`` and
    ``j <= i + l_span``.
    """
    if kind not in FAMILY_KINDS:
        raise UnsupportedFamily(f"unknown family kind {kind!r}")
    if kind == "L2":
        for i in l_i_range:
            for j in range(i + 2, i + l_span + 1):
                yield L2(i, j)
        return
    if kind == "L3":
        for i in l_i_range:
            for j in range(i + 3, i + l_span + 1):
                yield L3(i, j)
        return
    for k in k_range:
        if kind == "P1":
            if k >= 4:
                yield from (P1(k, i) for i in range(1, k + 1))
        elif k < 5:
            continue
        elif kind == "P2":
            yield from (P2(k, i) for i in range(1, k + 1))
        elif kind == "P3":
            yield from (P3(k, i) for i in range(1, k))
        else:
            for i in range(1, k - 1):
                yield from (P4(k, i, j) for j in range(i + 3, k + 2))
