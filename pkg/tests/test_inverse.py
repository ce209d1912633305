import pytest

from hfold import (
    FullInterval,
    IntervalMinusOne,
    IntervalMinusTwo,
    Status,
    build,
    classify_by_cardinality,
    classify_structure,
    consistency_check,
    enumerate_normal_sets,
    h_fold_cardinality,
    make_set,
)
from hfold.errors import InvalidParams, TooSmall
from hfold.families import iter_families, predict_cardinality
from hfold.inverse import CAVEAT_H2_EXTRA_PAIRS, CAVEAT_H2_HK_PLUS_1


def pairs(pred):
    out = set()
    for s in pred.structures:
        if isinstance(s, IntervalMinusTwo):
            out.add((s.i, s.j))
        elif isinstance(s, IntervalMinusOne):
            out.add((s.i, s.k + 1))
    return out


def test_remark_gap():
    p = classify_by_cardinality(3, 5, 14)
    assert p.status is Status.IMPOSSIBLE and p.structures == () and p.range_id == "theorem1"


def test_theorem1_moreover():
    p = classify_by_cardinality(3, 5, 15)
    assert p.status is Status.CLASSIFIED
    assert set(p.structures) == {IntervalMinusOne(5, 1), IntervalMinusOne(5, 4)}
    p = classify_by_cardinality(3, 7, 22)
    assert set(p.structures) == {IntervalMinusOne(7, i) for i in range(2, 6)}


def test_theorem2_case_a():
    p = classify_by_cardinality(3, 5, 17)
    assert p.status is Status.CLASSIFIED and p.range_id == "theorem2"
    assert pairs(p) == {(1, 2), (4, 5), (1, 5), (1, 3), (3, 5)}
    assert p.caveats == ()


def test_h2_caveat_pairs():
    p = classify_by_cardinality(2, 6, 13)
    a = {(1, 2), (5, 6), (1, 6), (1, 3), (4, 6)}
    assert pairs(p) == a | {(i, 7) for i in range(2, 5)}
    assert CAVEAT_H2_EXTRA_PAIRS in p.caveats
    # confirm by exhaustive enumeration up to diameter 8
    achievers = set()
    for N in enumerate_normal_sets(6, 8):
        if h_fold_cardinality(N, 2) == 13:
            achievers.add(classify_structure(N))
    assert achievers == set(p.structures)


def test_h2_first_range_caveat():
    p = classify_by_cardinality(2, 5, 10)
    assert set(p.structures) == {IntervalMinusOne(5, 1), IntervalMinusOne(5, 4)}
    assert CAVEAT_H2_HK_PLUS_1 in p.caveats


def test_minimum_and_out_of_range():
    p = classify_by_cardinality(2, 5, 9)
    assert p.status is Status.EXACT_MINIMUM and p.structures == (FullInterval(5),)
    assert classify_by_cardinality(2, 5, 8).status is Status.BELOW_MINIMUM
    assert classify_by_cardinality(3, 5, 19).status is Status.OUT_OF_CLASSIFIED_RANGE


def test_large_h_impossible_values():
    # for h = 5 the first range is (5k-4, 5k+3]; only hk and hk+1 occur
    k, h = 6, 5
    for card in range(h * k - h + 2, h * k + h - 1):
        st = classify_by_cardinality(h, k, card).status
        assert st is (Status.CLASSIFIED if card in (h * k, h * k + 1) else Status.IMPOSSIBLE)


def test_invalid_params():
    with pytest.raises(InvalidParams):
        classify_by_cardinality(1, 5, 5)
    with pytest.raises(InvalidParams):
        classify_by_cardinality(2, 4, 8)


def test_to_dict():
    d = classify_by_cardinality(3, 5, 14).to_dict()
    assert d == {"query": {"h": 3, "k": 5, "card": 14}, "status": "Impossible",
                 "range": "theorem1", "structures": [], "caveats": []}


def test_consistency_examples(S):
    r = consistency_check(S(0, 2, 3, 4, 5), 2)
    assert r.cardinality == 10 and r.structure == IntervalMinusOne(5, 1)
    assert r.checks["theorem1"] == "pass" and r.passed
    r = consistency_check(S(0, 1, 2, 3, 4), 3)
    assert r.cardinality == 13 and r.checks == {"theorem_b": "pass"}
    r = consistency_check(S(0, 1, 4, 5, 6), 3)
    assert r.cardinality == 19 and r.checks["theorem2"] == "vacuous" and r.passed
    # arbitrary affine image of a structured set
    r = consistency_check(make_set([7 + 3 * x for x in (0, 1, 2, 3, 5, 6)]), 2)
    assert r.set.elements == (0, 1, 2, 3, 5, 6) and r.passed and r.predicted == r.cardinality
    with pytest.raises(TooSmall):
        consistency_check(S(0, 1, 2, 3), 2)


def test_caveat_set_is_a_pass(S):
    r = consistency_check(S(0, 1, 3, 4, 5, 6), 2)
    assert r.cardinality == 13 and r.checks["theorem2"] == "pass"
    assert r.caveats == (CAVEAT_H2_EXTRA_PAIRS,)


def test_soundness_over_families():
    for kind in ("P1", "P2", "P3", "P4"):
        for f in iter_families(kind, range(5, 10)):
            S = build(f)
            for h in range(2, 5):
                card = predict_cardinality(f, h)
                p = classify_by_cardinality(h, S.k, card)
                if p.range_id is not None:
                    assert classify_structure(S) in p.structures, (f, h)
