"""Inverse classification: from (h, k, |hA|) back to the shape of A.

Two ranges above the minimum ``hk - h + 1`` are classified:

* ``(hk - h + 1, hk + h - 2]``: A's normal form is ``[0, k] \\ {i}``;
  ``|hA| = hk`` for ``i in {1, k-1}`` and ``hk + 1`` for ``2 <= i <= k-2``.
* ``(hk + h - 2, hk + 2h - 3]``: A's normal form is ``[0, k+1] \\ {i, j}``,
  with ``|hA|`` given by the P2/P3/P4 closed forms.

Values inside a range that no structure attains are reported Impossible
(``|3A| = 3k - 1`` is the classic example).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (
    FullInterval,
    IntervalMinusOne,
    IntervalMinusTwo,
    IntSet,
    StructureClass,
    classify_structure,
    normalize,
)
from .errors import InvalidParams, TooSmall
from .families import P1, pair_family, predict_cardinality
from .records import FAIL, PASS, VACUOUS, VerificationRecord
from .sumset import h_fold_cardinality

#: h = 2 achievers of 2k+1 outside the explicit pair list of the second range
CAVEAT_H2_EXTRA_PAIRS = (
    "h2_extra_pairs: for h=2, [0,k+1] minus {i,k+1} (2<=i<=k-2), i.e. [0,k] minus {i}, "
    "also reaches 2k+1; these sets are not in the case (a) pair list"
)
#: h = 2 makes hk+1 fall outside the first range
CAVEAT_H2_HK_PLUS_1 = (
    "h2_hk_plus_1_out_of_range: for h=2 the value hk+1 of [0,k] minus {i} (2<=i<=k-2) "
    "lies above hk+h-2, so those sets are not listed in the first range"
)


class Status(str, enum.Enum):
    BELOW_MINIMUM = "BelowMinimum"
    EXACT_MINIMUM = "ExactMinimum"
    CLASSIFIED = "Classified"
    IMPOSSIBLE = "Impossible"
    OUT_OF_CLASSIFIED_RANGE = "OutOfClassifiedRange"


@dataclass(frozen=True)
class InversePrediction:
    query: tuple
    status: Status
    structures: tuple = ()
    caveats: tuple = ()
    #: "theorem1", "theorem2" or None, naming the classified range hit
    range_id: Optional[str] = None

    def to_dict(self) -> dict:
        h, k, card = self.query
        return {
            "query": {"h": h, "k": k, "card": card},
            "status": self.status.value,
            "range": self.range_id,
            "structures": [s.to_dict() for s in self.structures],
            "caveats": list(self.caveats),
        }


def ranges(h: int, k: int) -> dict:
    """Bounds of the classified ranges: minimum, first range top, second range top."""
    return {"minimum": h * k - h + 1, "theorem1": h * k + h - 2, "theorem2": h * k + 2 * h - 3}


def classify_by_cardinality(h: int, k: int, card: int) -> InversePrediction:
    """Admissible normal forms of a k-element A with ``|hA| = card``."""
    if h < 2 or k < 5:
        raise InvalidParams(f"classification needs h >= 2 and k >= 5, got h={h}, k={k}")
    return _classify(h, k, card)


@lru_cache(maxsize=4096)
def _classify(h: int, k: int, card: int) -> InversePrediction:
    q = (h, k, card)
    r = ranges(h, k)
    if card < r["minimum"]:
        return InversePrediction(q, Status.BELOW_MINIMUM)
    if card == r["minimum"]:
        return InversePrediction(q, Status.EXACT_MINIMUM, (FullInterval(k),))
    if card <= r["theorem1"]:
        caveats = (CAVEAT_H2_HK_PLUS_1,) if h == 2 else ()
        if card == h * k:
            found = (IntervalMinusOne(k, 1), IntervalMinusOne(k, k - 1))
        elif card == h * k + 1:
            found = tuple(IntervalMinusOne(k, i) for i in range(2, k - 1))
        else:
            return InversePrediction(q, Status.IMPOSSIBLE, (), caveats, "theorem1")
        return InversePrediction(q, Status.CLASSIFIED, found, caveats, "theorem1")
    if card <= r["theorem2"]:
        found, caveats = [], []
        for i in range(1, k + 1):
            for j in range(i + 1, k + 2):
                if predict_cardinality(pair_family(k, i, j), h) != card:
                    continue
                if j <= k:
                    found.append(IntervalMinusTwo(k, i, j))
                else:
                    # j = k+1 is the top element removed: normal form is [0,k] \ {i}
                    found.append(IntervalMinusOne(k, i))
                    if CAVEAT_H2_EXTRA_PAIRS not in caveats:
                        caveats.append(CAVEAT_H2_EXTRA_PAIRS)
        status = Status.CLASSIFIED if found else Status.IMPOSSIBLE
        return InversePrediction(q, status, tuple(found), tuple(caveats), "theorem2")
    return InversePrediction(q, Status.OUT_OF_CLASSIFIED_RANGE)


def family_check(structure: StructureClass, h: int) -> tuple:
    """``(check_id, predicted |hA|)`` for a structured normal form, else ``(None, None)``."""
    if isinstance(structure, FullInterval):
        return "theorem_b", h * structure.k - h + 1
    if isinstance(structure, IntervalMinusOne) and structure.k >= 4:
        return "prop1", predict_cardinality(P1(structure.k, structure.i), h)
    if isinstance(structure, IntervalMinusTwo) and structure.k >= 5:
        f = pair_family(structure.k, structure.i, structure.j)
        return "prop" + type(f).__name__[1], predict_cardinality(f, h)
    return None, None


def range_checks(structure: StructureClass, pred: InversePrediction) -> tuple:
    """Check outcomes of one observed structure against a prediction, plus caveats."""
    st = pred.status
    if st is Status.BELOW_MINIMUM:
        return {"theorem_a": FAIL}, ()
    if st is Status.EXACT_MINIMUM:
        return {"theorem_b": PASS if structure in pred.structures else FAIL}, ()
    if st is Status.OUT_OF_CLASSIFIED_RANGE:
        return {"theorem1": VACUOUS, "theorem2": VACUOUS}, ()
    ok = structure in pred.structures
    caveats = ()
    if ok and pred.range_id == "theorem2" and isinstance(structure, IntervalMinusOne):
        caveats = (CAVEAT_H2_EXTRA_PAIRS,)
    other = "theorem2" if pred.range_id == "theorem1" else "theorem1"
    return {pred.range_id: PASS if ok else FAIL, other: VACUOUS}, caveats


def consistency_check(A: IntSet, h: int) -> VerificationRecord:
    """Normalize A, compute |hA| and test A's shape against the inverse prediction."""
    if A.k < 5:
        raise TooSmall(f"consistency_check needs |A| >= 5, got {A.k}")
    if h < 2:
        raise InvalidParams(f"consistency_check needs h >= 2, got {h}")
    N = normalize(A).normal
    card = h_fold_cardinality(N, h)
    structure = classify_structure(N)
    pred = classify_by_cardinality(h, N.k, card)
    checks, caveats = range_checks(structure, pred)
    check_id, predicted = family_check(structure, h)
    if check_id is not None:
        verdict = PASS if predicted == card else FAIL
        if checks.get(check_id) != FAIL:
            checks[check_id] = verdict
    return VerificationRecord(N, h, card, structure, predicted, checks, caveats)
