"""Exhaustive enumeration of normal-form sets and theorem sweeps.

Work is split into shards keyed by ``(diameter, first interior element)``.
Shards run on a process pool and are merged in key order, so a report
does not depend on the number of workers.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from .bounds import (
    freiman_2a_bound,
    lev_chain_bound,
    lev_step_bound,
    theorem_d_check,
)
from .core import (
    FullInterval,
    IntervalMinusOne,
    IntervalMinusTwo,
    IntSet,
    Other,
    is_ap,
    reflect,
)
from .errors import InvalidParams, SumsetError, TooLarge
from .families import (
    FAMILY_KINDS,
    L2,
    L3,
    build,
    iter_families,
    predict_cardinality,
    predict_sumset_interval,
)
from .inverse import _classify, family_check, range_checks, ranges
from .records import FAIL, PASS, VACUOUS, VerificationRecord
from .sumset import fold_masks, h_fold

CHECK_IDS = (
    "theorem_a", "theorem_b", "theorem_c", "theorem_d", "theorem_e_step",
    "theorem_e_chain", "lemma1_converse", "lemma2", "lemma3", "prop1", "prop2",
    "prop3", "prop4", "theorem1", "theorem2", "remark1",
)
FAMILY_CHECKS = {"prop1": "P1", "prop2": "P2", "prop3": "P3", "prop4": "P4",
                 "lemma2": "L2", "lemma3": "L3"}
#: cap on candidate subsets (before the gcd filter) a single sweep may visit
ENUMERATION_LIMIT = 10**8
FAMILY_H_MAX = 6
FAMILY_K_MAX = 16


@dataclass(frozen=True)
class EnumSpec:
    k: int
    max_diameter: int
    h_values: tuple = (2,)
    theorems: tuple = CHECK_IDS
    dedup_reflections: bool = False

    def __post_init__(self):
        object.__setattr__(self, "h_values", tuple(sorted(set(self.h_values))))
        object.__setattr__(self, "theorems", tuple(self.theorems))
        if self.k < 2:
            raise InvalidParams(f"k must be >= 2, got {self.k}")
        if self.max_diameter < self.k - 1:
            raise InvalidParams(f"max_diameter must be >= k-1={self.k - 1}")
        if not self.h_values or min(self.h_values) < 2:
            raise InvalidParams(f"h_values must be nonempty with every h >= 2: {self.h_values}")
        unknown = set(self.theorems) - set(CHECK_IDS)
        if unknown:
            raise InvalidParams(f"unknown check ids: {sorted(unknown)}")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "max_diameter": self.max_diameter,
            "h_values": list(self.h_values),
            "theorems": list(self.theorems),
            "dedup_reflections": self.dedup_reflections,
        }


@dataclass(frozen=True)
class FamilySweepSpec:
    h_min: int
    h_max: int
    k_min: int
    k_max: int
    kinds: tuple
    l_i_range: tuple
    l_span: int

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["kinds"] = list(self.kinds)
        d["l_i_range"] = list(self.l_i_range)
        return d


@dataclass
class SweepReport:
    spec: object
    total_sets: int = 0
    failures: list = field(default_factory=list)
    histogram: dict = field(default_factory=dict)
    achievable_gaps: dict = field(default_factory=dict)
    coverage_failures: list = field(default_factory=list)
    caveats: list = field(default_factory=list)
    #: serialized records in report order; None when records were not kept
    lines: Optional[list] = None
    partial: bool = False
    error: Optional[str] = None

    @property
    def failure_count(self) -> int:
        return len(self.failures) + len(self.coverage_failures)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0 and not self.partial

    def records(self) -> Iterator[VerificationRecord]:
        for line in self.lines or ():
            yield VerificationRecord.from_json(line)

    def summary(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "total_sets": self.total_sets,
            "failure_count": self.failure_count,
            "failures": [r.to_dict() for r in self.failures],
            "coverage_failures": self.coverage_failures,
            "histogram": {
                str(h): {str(c): n for c, n in sorted(hist.items())}
                for h, hist in sorted(self.histogram.items())
            },
            "achievable_gaps": {str(h): g for h, g in sorted(self.achievable_gaps.items())},
            "caveats": self.caveats,
            "partial": self.partial,
            "error": self.error,
        }

    def write_report(self, path) -> None:
        if self.lines is None:
            raise ValueError("records were not kept for this sweep")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for line in self.lines:
                fh.write(line + "\n")

    def write_summary(self, path) -> None:
        Path(path).write_text(json.dumps(self.summary(), indent=2) + "\n", encoding="utf-8")


class SweepAborted(SumsetError):
    """A component error stopped a sweep; ``report`` holds the merged shards so far."""

    def __init__(self, message: str, report: SweepReport, exit_code: int = 2):
        super().__init__(message)
        self.report = report
        self.exit_code = exit_code


# -- enumeration --------------------------------------------------------------


def candidate_count(k: int, max_diameter: int) -> int:
    """Subsets {0, ..., N} with both endpoints, summed over N; gcd not yet applied."""
    if k == 2:
        return max(0, max_diameter)
    return sum(math.comb(n - 1, k - 2) for n in range(k - 1, max_diameter + 1))


def _check_enum(k: int, max_diameter: int) -> None:
    if k < 2 or max_diameter < k - 1:
        raise InvalidParams(f"need k >= 2 and max_diameter >= k-1, got k={k}, {max_diameter}")
    n = candidate_count(k, max_diameter)
    if n > ENUMERATION_LIMIT:
        raise TooLarge(
            f"{n} candidate sets exceed ENUMERATION_LIMIT={ENUMERATION_LIMIT}; "
            "use a smaller k or max_diameter"
        )


def shard_keys(k: int, max_diameter: int) -> list:
    keys = []
    for n in range(k - 1, max_diameter + 1):
        if k == 2:
            keys.append((n, 0))
        else:
            keys.extend((n, first) for first in range(1, n - k + 3))
    return keys


def _shard_sets(k: int, n: int, first: int) -> Iterator[tuple]:
    if k == 2:
        if n == 1:
            yield (0, 1)
        return
    g0 = math.gcd(first, n)
    for rest in combinations(range(first + 1, n), k - 3):
        g = g0
        for x in rest:
            g = math.gcd(g, x)
        if g == 1:
            yield (0, first) + rest + (n,)


def enumerate_normal_sets(k: int, max_diameter: int) -> Iterator[IntSet]:
    """Every normal-form k-set of diameter <= max_diameter, by diameter then lexicographically."""
    _check_enum(k, max_diameter)
    for n, first in shard_keys(k, max_diameter):
        for s in _shard_sets(k, n, first):
            yield IntSet._trusted(np.array(s, dtype=np.int64))


# -- per-set checks -----------------------------------------------------------


def _structure(s: tuple):
    k, diam = len(s), s[-1]
    if diam == k - 1:
        return FullInterval(k)
    if diam > k + 1:
        return Other(diam)
    holes = sorted(set(range(diam + 1)).difference(s))
    if diam == k:
        return IntervalMinusOne(k, holes[0])
    return IntervalMinusTwo(k, holes[0], holes[1])


class _Ctx:
    __slots__ = ("A", "s", "k", "h", "card", "cards", "structure", "_step")

    def __init__(self, A, s, h, cards, structure):
        self.A, self.s, self.k, self.h = A, s, len(s), h
        self.cards = cards
        self.card = cards[h - 1]
        self.structure = structure
        self._step = None

    @property
    def step(self):
        if self._step is None:
            self._step = lev_step_bound(self.A, self.h, self.cards[self.h - 2])
        return self._step


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def _theorem_a(c):
    return _verdict(c.card >= c.h * c.k - c.h + 1)


def _theorem_b(c):
    return _verdict((c.card == c.h * c.k - c.h + 1) == is_ap(c.A)[0])


def _theorem_c(c):
    if c.h != 2 or c.k < 3:
        return VACUOUS
    return _verdict(c.card >= freiman_2a_bound(c.A))


def _theorem_d(c):
    if c.h != 2 or c.k < 3:
        return VACUOUS
    rep = theorem_d_check(c.A)
    if rep.context["vacuous"]:
        return VACUOUS
    return _verdict(rep.holds)


def _theorem_e_step(c):
    return _verdict(c.card >= c.step)


def _theorem_e_chain(c):
    chain = lev_chain_bound(c.A, c.h)
    return _verdict(c.step >= chain and c.card >= chain)


def _lemma1_converse(c):
    k, h, diam = c.k, c.h, c.s[-1]
    if k < 5 or diam <= k:
        return VACUOUS
    if diam == k + 1:
        return _verdict(c.card > h * k + h - 2)
    return _verdict(c.card > h * k + 2 * h - 3)


def _lemma2(c):
    st = c.structure
    if isinstance(st, IntervalMinusOne) and 2 <= st.i <= st.k - 2:
        # min 0 and max hk, so |hA| = hk + 1 means hA = [0, hk]
        return _verdict(c.card == c.h * st.k + 1)
    return VACUOUS


def _lemma3(c):
    st = c.structure
    if c.h >= 3 and isinstance(st, IntervalMinusTwo) and st.j == st.i + 1 and 2 <= st.i <= st.k - 2:
        return _verdict(c.card == c.h * (st.k + 1) + 1)
    return VACUOUS


def _prop(check_id):
    def run(c):
        got, predicted = family_check(c.structure, c.h)
        if got == "theorem_b":
            got = "prop1" if c.k >= 4 else None
        if got != check_id:
            return VACUOUS
        return _verdict(predicted == c.card)

    return run


def _range(check_id):
    def run(c):
        if c.k < 5:
            return VACUOUS
        pred = _classify(c.h, c.k, c.card)
        if pred.range_id != check_id:
            return VACUOUS
        checks, caveats = range_checks(c.structure, pred)
        return checks[check_id], caveats

    return run


def _remark1(c):
    if c.h != 3 or c.k < 5:
        return VACUOUS
    return _verdict(c.card != 3 * c.k - 1)


_CHECKS = {
    "theorem_a": _theorem_a,
    "theorem_b": _theorem_b,
    "theorem_c": _theorem_c,
    "theorem_d": _theorem_d,
    "theorem_e_step": _theorem_e_step,
    "theorem_e_chain": _theorem_e_chain,
    "lemma1_converse": _lemma1_converse,
    "lemma2": _lemma2,
    "lemma3": _lemma3,
    "prop1": _prop("prop1"),
    "prop2": _prop("prop2"),
    "prop3": _prop("prop3"),
    "prop4": _prop("prop4"),
    "theorem1": _range("theorem1"),
    "theorem2": _range("theorem2"),
    "remark1": _remark1,
}


def _predicted(structure, h):
    if isinstance(structure, FullInterval):
        return h * structure.k - h + 1
    return family_check(structure, h)[1]


def evaluate_set(A: IntSet, h_values, theorems) -> list:
    """One VerificationRecord per h for a normal-form set."""
    s = tuple(A.tolist())
    cards = [m.bit_count() for m in fold_masks(s, max(h_values))]
    structure = _structure(s)
    out = []
    for h in h_values:
        c = _Ctx(A, s, h, cards, structure)
        checks, caveats = {}, []
        for cid in theorems:
            res = _CHECKS[cid](c)
            if isinstance(res, tuple):
                res, extra = res
                caveats.extend(x for x in extra if x not in caveats)
            checks[cid] = res
        out.append(VerificationRecord(A, h, c.card, structure, _predicted(structure, h),
                                      checks, tuple(caveats)))
    return out


# -- sweeps -------------------------------------------------------------------


@dataclass
class _ShardResult:
    count: int = 0
    lines: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    histogram: dict = field(default_factory=dict)
    observed: dict = field(default_factory=dict)
    caveats: set = field(default_factory=set)


def _in_range(check_id: str, h: int, k: int, card: int) -> bool:
    r = ranges(h, k)
    if check_id == "theorem1":
        return r["minimum"] < card <= r["theorem1"]
    return r["theorem1"] < card <= r["theorem2"]


def _run_shard(args) -> _ShardResult:
    spec, n, first, keep = args
    res = _ShardResult()
    coverage_ids = [t for t in ("theorem1", "theorem2") if t in spec.theorems]
    for s in _shard_sets(spec.k, n, first):
        A = IntSet._trusted(np.array(s, dtype=np.int64))
        if spec.dedup_reflections and reflect(A).elements < s:
            continue
        res.count += 1
        for rec in evaluate_set(A, spec.h_values, spec.theorems):
            hist = res.histogram.setdefault(rec.h, {})
            hist[rec.cardinality] = hist.get(rec.cardinality, 0) + 1
            if keep:
                res.lines.append(rec.to_json())
            if not rec.passed:
                res.failures.append(rec)
            res.caveats.update(rec.caveats)
            for cid in coverage_ids:
                if spec.k >= 5 and _in_range(cid, rec.h, spec.k, rec.cardinality):
                    key = (cid, rec.h, rec.cardinality)
                    res.observed.setdefault(key, set()).add(rec.structure)
    return res


def _merge(report: SweepReport, part: _ShardResult, observed: dict) -> None:
    report.total_sets += part.count
    if report.lines is not None:
        report.lines.extend(part.lines)
    report.failures.extend(part.failures)
    for h, hist in part.histogram.items():
        tgt = report.histogram.setdefault(h, {})
        for c, n in hist.items():
            tgt[c] = tgt.get(c, 0) + n
    for key, structs in part.observed.items():
        observed.setdefault(key, set()).update(structs)
    report.caveats = sorted(set(report.caveats) | part.caveats)


def _finish(report: SweepReport, observed: dict) -> None:
    spec = report.spec
    for h in spec.h_values:
        hist = report.histogram.setdefault(h, {})
        low = h * spec.k - h + 1
        top = max(hist) if hist else low - 1
        report.achievable_gaps[h] = [c for c in range(low, top + 1) if c not in hist]
    # exact-table check: every predicted structure must actually occur
    complete = spec.k >= 5 and spec.max_diameter >= spec.k + 1 and not spec.dedup_reflections
    if not complete:
        return
    for cid in ("theorem1", "theorem2"):
        if cid not in spec.theorems:
            continue
        for h in spec.h_values:
            r = ranges(h, spec.k)
            lo = r["minimum"] + 1 if cid == "theorem1" else r["theorem1"] + 1
            for card in range(lo, r[cid] + 1):
                pred = _classify(h, spec.k, card)
                seen = observed.get((cid, h, card), set())
                missing = [s for s in pred.structures if s not in seen]
                if missing:
                    report.coverage_failures.append({
                        "check": cid, "h": h, "card": card,
                        "missing": [s.to_dict() for s in missing],
                    })


def run_sweep(spec: EnumSpec, jobs: int = 1, keep_records: bool = True) -> SweepReport:
    """Enumerate every normal-form set of ``spec`` and evaluate the requested checks."""
    _check_enum(spec.k, spec.max_diameter)
    report = SweepReport(spec, lines=[] if keep_records else None)
    observed: dict = {}
    tasks = [(spec, n, first, keep_records) for n, first in shard_keys(spec.k, spec.max_diameter)]
    try:
        if jobs <= 1:
            for t in tasks:
                _merge(report, _run_shard(t), observed)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunk = max(1, len(tasks) // (8 * jobs))
                for part in pool.map(_run_shard, tasks, chunksize=chunk):
                    _merge(report, part, observed)
    except SumsetError as exc:
        report.partial = True
        report.error = f"{type(exc).__name__}: {exc}"
        raise SweepAborted(f"sweep aborted: {report.error}", report, exc.exit_code) from exc
    _finish(report, observed)
    return report


def family_sweep(
    h_max: int,
    k_max: int,
    *,
    h_min: int = 2,
    k_min: int = 4,
    kinds=tuple(FAMILY_KINDS),
    l_i_range=range(2, 9),
    l_span: int = 8,
    keep_records: bool = True,
) -> SweepReport:
    """Check every closed-form family prediction against the sumset engine."""
    if h_max > FAMILY_H_MAX or k_max > FAMILY_K_MAX:
        raise TooLarge(f"family_sweep is capped at h_max={FAMILY_H_MAX}, k_max={FAMILY_K_MAX}")
    if h_min < 2 or h_max < h_min or k_max < k_min:
        raise InvalidParams(f"empty or invalid ranges h=[{h_min},{h_max}] k=[{k_min},{k_max}]")
    spec = FamilySweepSpec(h_min, h_max, k_min, k_max, tuple(kinds), tuple(l_i_range), l_span)
    report = SweepReport(spec, lines=[] if keep_records else None)
    records = []
    check_of = {v: k for k, v in FAMILY_CHECKS.items()}
    for kind in spec.kinds:
        for f in iter_families(kind, range(k_min, k_max + 1), l_i_range, l_span):
            S = build(f)
            report.total_sets += 1
            for h in range(h_min, h_max + 1):
                if isinstance(f, L3) and h < 3:
                    continue
                result = h_fold(S, h)
                predicted = predict_cardinality(f, h)
                ok = predicted == result.cardinality
                if isinstance(f, (L2, L3)):
                    lo, hi = predict_sumset_interval(f, h)
                    ok = ok and result.elements.elements == tuple(range(lo, hi + 1))
                rec = VerificationRecord(
                    S, h, result.cardinality, _structure(S.elements), predicted,
                    {check_of[kind]: _verdict(ok)},
                )
                records.append(rec)
                hist = report.histogram.setdefault(h, {})
                hist[rec.cardinality] = hist.get(rec.cardinality, 0) + 1
                if not ok:
                    report.failures.append(rec)
    records.sort(key=lambda r: r.sort_key)
    if keep_records:
        report.lines = [r.to_json() for r in records]
    return report
