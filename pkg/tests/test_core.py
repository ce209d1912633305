import numpy as np
import pytest
from hypothesis import given, strategies as st

from hfold import (
    FullInterval,
    IntervalMinusOne,
    IntervalMinusTwo,
    IntSet,
    Other,
    classify_structure,
    diff_gcd,
    is_ap,
    make_set,
    minimal_ap_cover_length,
    normalize,
    parse_set_literal,
    read_set_file,
    reflect,
    translate,
)
from hfold.core import structure_from_dict
from hfold.errors import DuplicateElement, EmptyInput, NotNormalForm, Overflow, ParseError, TooSmall

small_sets = st.sets(st.integers(-50, 50), min_size=1, max_size=8).map(make_set)
pair_sets = st.sets(st.integers(-10**6, 10**6), min_size=2, max_size=8).map(make_set)


def test_make_set_sorts(S):
    assert make_set([13, 3, 9, 5]).elements == (3, 5, 9, 13)
    assert make_set([0]).elements == (0,)


def test_make_set_errors():
    with pytest.raises(DuplicateElement) as exc:
        make_set([1, 1])
    assert exc.value.value == 1
    with pytest.raises(EmptyInput):
        make_set([])
    with pytest.raises(Overflow):
        make_set([2**63])
    with pytest.raises(Overflow):
        make_set([-(2**63) - 1])
    make_set([2**63 - 1, -(2**63)])


def test_intset_constructor_validates():
    with pytest.raises(DuplicateElement):
        IntSet([0, 1, 1])
    with pytest.raises(ValueError):
        IntSet([2, 1])


def test_intset_is_readonly(S):
    A = S(1, 2, 3)
    with pytest.raises(ValueError):
        A.array[0] = 7
    assert 2 in A and 5 not in A
    assert A == S(3, 2, 1) and hash(A) == hash(S(1, 2, 3))


@pytest.mark.parametrize("values, d", [((3, 5, 9, 13), 2), ((0, 1), 1), ((0, 6, 15), 3)])
def test_diff_gcd(values, d):
    assert diff_gcd(make_set(values)) == d


def test_singletons_rejected(S):
    for fn in (diff_gcd, normalize, minimal_ap_cover_length):
        with pytest.raises(TooSmall):
            fn(S(7))


@pytest.mark.parametrize(
    "values, normal, base, dilation",
    [
        ((3, 5, 9, 13), (0, 1, 3, 5), 3, 2),
        ((0, 1, 2), (0, 1, 2), 0, 1),
        ((10, 20, 30), (0, 1, 2), 10, 10),
    ],
)
def test_normalize(values, normal, base, dilation):
    N = normalize(make_set(values))
    assert (N.normal.elements, N.base, N.dilation) == (normal, base, dilation)


def test_normalize_extreme_range():
    A = make_set([-(2**63), 2**63 - 1])
    N = normalize(A)
    assert N.normal.elements == (0, 1) and N.dilation == 2**64 - 1
    assert N.denormalize() == A


@pytest.mark.parametrize(
    "values, c, out", [((0, 2, 5), 3, (3, 5, 8)), ((1, 4), 0, (1, 4)), ((0, 1), -1, (-1, 0))]
)
def test_translate(values, c, out):
    assert translate(make_set(values), c).elements == out


def test_translate_overflow(S):
    with pytest.raises(Overflow):
        translate(S(0, 2**63 - 1), 1)


@pytest.mark.parametrize(
    "values, out",
    [
        ((0, 2, 3, 4, 5), (0, 1, 2, 3, 5)),
        ((0, 1, 2), (0, 1, 2)),
        ((0, 3, 4, 6, 7), (0, 1, 3, 4, 7)),
    ],
)
def test_reflect(values, out):
    assert reflect(make_set(values)).elements == out


def test_is_ap(S):
    assert is_ap(S(2, 5, 8, 11)) == (True, 3)
    assert is_ap(S(0, 1, 3)) == (False, None)
    assert is_ap(S(7))[0]
    assert is_ap(S(4, 9)) == (True, 5)


@pytest.mark.parametrize(
    "values, n", [((0, 2, 6), 4), (tuple(range(10)), 10), ((0, 3, 7), 8)]
)
def test_minimal_ap_cover_length(values, n):
    assert minimal_ap_cover_length(make_set(values)) == n


@pytest.mark.parametrize(
    "values, cls",
    [
        ((0, 1, 2, 3, 4), FullInterval(5)),
        ((0, 2, 3, 4, 5), IntervalMinusOne(5, 1)),
        ((0, 1, 4, 5, 6), IntervalMinusTwo(5, 2, 3)),
        ((0, 1, 5), Other(5)),
    ],
)
def test_classify_structure(values, cls):
    assert classify_structure(make_set(values)) == cls
    assert structure_from_dict(cls.to_dict()) == cls


def test_classify_structure_requires_normal_form(S):
    with pytest.raises(NotNormalForm):
        classify_structure(S(1, 2, 3))
    with pytest.raises(NotNormalForm):
        classify_structure(S(0, 2, 4))
    assert classify_structure(normalize(S(3, 5, 7))) == FullInterval(3)


def test_parse_set_literal(tmp_path):
    assert parse_set_literal("0, 2, 3 ,5").elements == (0, 2, 3, 5)
    assert parse_set_literal("-4").elements == (-4,)
    with pytest.raises(ParseError):
        parse_set_literal("0,,2")
    with pytest.raises(EmptyInput):
        parse_set_literal("  ")
    p = tmp_path / "a.txt"
    p.write_text("5\n0\n\n3\n")
    assert read_set_file(p).elements == (0, 3, 5)
    p.write_text("1\nx\n")
    with pytest.raises(ParseError):
        read_set_file(p)


@given(pair_sets)
def test_normalize_roundtrip(A):
    N = normalize(A)
    assert N.denormalize() == A
    assert N.normal.min == 0 and diff_gcd(N.normal) == 1
    again = normalize(N.normal)
    assert again.base == 0 and again.dilation == 1 and again.normal == N.normal


@given(small_sets)
def test_reflect_involution(A):
    assert reflect(reflect(A)) == A
    assert reflect(A).min == A.min and reflect(A).max == A.max


@given(pair_sets)
def test_is_ap_iff_cover_is_tight(A):
    assert is_ap(A)[0] == (minimal_ap_cover_length(A) == A.k)


@given(st.sets(st.integers(0, 14), min_size=1, max_size=10))
def test_classify_total_on_normal_forms(values):
    values = sorted(values)
    A = make_set([v - values[0] for v in values])
    if A.k >= 2:
        A = normalize(A).normal
    cls = classify_structure(A)
    holes = A.max + 1 - A.k
    expected = {0: FullInterval, 1: IntervalMinusOne, 2: IntervalMinusTwo}.get(holes, Other)
    assert isinstance(cls, expected)
    if holes in (1, 2):
        assert all(0 < x < A.max for x in list(cls.__dict__.values())[1:])


def test_large_set_repr_and_storage():
    A = make_set(np.arange(0, 10**6, 7))
    assert A.k == len(range(0, 10**6, 7)) and "k=" in repr(A)
