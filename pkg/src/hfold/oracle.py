"""Definition-level oracle for h-fold sumsets.

Deliberately shares nothing with :mod:`hfold.sumset`: it walks every
h-multiset of A and collects the sums in a Python set.
"""

from itertools import combinations_with_replacement
from math import comb

from .core import IntSet, make_set
from .errors import InvalidH, Overflow, TooLarge
from .sumset import SumsetResult

#: maximum number of h-multisets the oracle will enumerate
MULTISET_LIMIT = 10**7


def h_fold_bruteforce(A: IntSet, h: int) -> SumsetResult:
    if isinstance(h, bool) or not isinstance(h, int) or h < 1:
        raise InvalidH(f"h must be a positive integer, got {h!r}")
    n = comb(A.k + h - 1, h)
    if n > MULTISET_LIMIT:
        raise TooLarge(f"{n} multisets exceed MULTISET_LIMIT={MULTISET_LIMIT}")
    for end in (A.min, A.max):
        if not -(2**63) <= h * end < 2**63:
            raise Overflow(f"{h} * {end} does not fit in int64")
    sums = {sum(c) for c in combinations_with_replacement(A.tolist(), h)}
    return SumsetResult(h, A, make_set(sums))
