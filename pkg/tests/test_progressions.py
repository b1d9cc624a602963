"""Minimal AP covers, BP validity, and minimal BP covers."""

import pytest
from hypothesis import given, settings, strategies as st

from sumstruct.intset import IntSet
from sumstruct.progressions import (
    ApWindow,
    BpCover,
    ap_cover,
    bp_cover,
    bp_cover_within,
    is_valid_bp,
)
from sumstruct.sumset import doubling_size, sumset

import oracles


small_sets = st.lists(
    st.integers(min_value=0, max_value=24), min_size=1, max_size=10
).map(lambda xs: IntSet(xs))


# --- ApWindow / BpCover types --------------------------------------------------

def test_ap_window_materialize():
    w = ApWindow(start=10, diff=4, length=4)
    assert w.materialize().elements == (10, 14, 18, 22)
    assert w.end == 22


def test_ap_window_validation():
    with pytest.raises(ValueError):
        ApWindow(start=0, diff=0, length=3)
    with pytest.raises(ValueError):
        ApWindow(start=0, diff=2, length=0)


def test_bp_cover_totals_and_flags():
    c = BpCover(I=ApWindow(0, 3, 3), J=ApWindow(1, 3, 2))
    assert c.total_length == 5
    assert c.diff == 3
    assert not c.has_singleton
    assert c.materialize().elements == (0, 1, 3, 4, 6)
    s = BpCover(I=ApWindow(0, 1, 1), J=ApWindow(5, 1, 1))
    assert s.has_singleton


def test_bp_cover_requires_same_diff():
    with pytest.raises(ValueError):
        BpCover(I=ApWindow(0, 2, 3), J=ApWindow(1, 3, 2))


# --- ap_cover ------------------------------------------------------------------

def test_ap_cover_family():
    w = ap_cover(IntSet(list(range(14)) + [26, 52]))
    assert (w.start, w.diff, w.length) == (0, 1, 53)


def test_ap_cover_gcd():
    w = ap_cover(IntSet([10, 14, 22]))
    assert (w.start, w.diff, w.length) == (10, 4, 4)


def test_ap_cover_pair():
    w = ap_cover(IntSet([0, 1]))
    assert (w.start, w.diff, w.length) == (0, 1, 2)


def test_ap_cover_singleton_convention():
    w = ap_cover(IntSet([7]))
    assert (w.start, w.diff, w.length) == (7, 1, 1)


@given(small_sets)
def test_ap_cover_contains_and_matches_oracle(a):
    w = ap_cover(a)
    covered = set(w.materialize().elements)
    assert set(a.elements) <= covered
    assert w.length == oracles.brute_ap_cover_length(a.elements)


@given(small_sets)
def test_ap_cover_minimality_exhaustive(a):
    # An AP of difference d covers a iff d divides every gap from min(a);
    # the shortest such AP has length span/d + 1. None beats ap_cover, and
    # every covering difference divides the cover's difference.
    w = ap_cover(a)
    span = a.span
    for d in range(1, span + 2):
        if all((x - a.min) % d == 0 for x in a.elements):
            assert w.length <= (span // d + 1 if span else 1)
            assert w.diff % d == 0


# --- is_valid_bp ----------------------------------------------------------------

def test_valid_bp_two_intervals():
    assert is_valid_bp(ApWindow(0, 1, 13), ApWindow(45, 1, 13))


def test_valid_bp_residue_separated():
    assert is_valid_bp(ApWindow(0, 3, 3), ApWindow(1, 3, 2))


def test_invalid_bp_overlapping_sums():
    assert not is_valid_bp(ApWindow(0, 1, 3), ApWindow(20, 1, 23))


def test_is_valid_bp_rejects_mixed_diffs():
    with pytest.raises(ValueError):
        is_valid_bp(ApWindow(0, 2, 3), ApWindow(1, 3, 2))


def test_is_valid_bp_exhaustive_against_brute_force():
    # Every window pair with shared step and combined extent <= 30.
    checked = 0
    for d in range(1, 7):
        for s1 in range(0, 9):
            for l1 in range(1, 7):
                for s2 in range(0, 25):
                    for l2 in range(1, 7):
                        i = ApWindow(s1, d, l1)
                        j = ApWindow(s2, d, l2)
                        if max(i.end, j.end) > 30:
                            continue
                        got = is_valid_bp(i, j)
                        want = oracles.brute_valid_bp(
                            list(i.materialize()), list(j.materialize())
                        )
                        assert got == want, (i, j)
                        checked += 1
    assert checked > 10_000


# --- bp_cover -------------------------------------------------------------------

def test_bp_cover_equality_case():
    c = bp_cover(IntSet([0, 1, 3, 4, 6]))
    assert (c.total_length, c.I, c.J) == (5, ApWindow(0, 3, 3), ApWindow(1, 3, 2))


def test_bp_cover_interval_plus_far_pair():
    c = bp_cover(IntSet(list(range(13)) + [45, 57]))
    assert c.total_length == 26
    assert (c.I, c.J) == (ApWindow(0, 1, 13), ApWindow(45, 1, 13))


def test_bp_cover_three_blocks_has_none():
    assert bp_cover(IntSet([0, 1, 2, 20, 21, 22, 40, 41, 42])) is None


def test_bp_cover_full_interval_none():
    assert bp_cover(IntSet(range(15))) is None


def test_bp_cover_pair_special_case():
    c = bp_cover(IntSet([0, 5]))
    assert (c.total_length, c.I, c.J) == (2, ApWindow(0, 1, 1), ApWindow(5, 1, 1))


def test_bp_cover_singleton_none():
    assert bp_cover(IntSet([3])) is None


def test_bp_cover_parts_meet_set():
    c = bp_cover(IntSet([0, 1, 3, 4, 6, 7, 9]))
    assert (c.total_length, c.I, c.J) == (7, ApWindow(0, 3, 4), ApWindow(1, 3, 3))
    els = set([0, 1, 3, 4, 6, 7, 9])
    assert els & set(c.I.materialize().elements)
    assert els & set(c.J.materialize().elements)


@settings(max_examples=150, deadline=None)
@given(small_sets)
def test_bp_cover_matches_unpruned_oracle(a):
    got = bp_cover(a)
    want = oracles.brute_bp_cover(a.elements)
    if want is None:
        assert got is None
    else:
        total, w1, w2 = want
        assert got is not None
        assert got.total_length == total
        assert (got.I.start, got.I.diff, got.I.length) == w1
        assert (got.J.start, got.J.diff, got.J.length) == w2


@settings(max_examples=60, deadline=None)
@given(
    small_sets,
    st.integers(min_value=-3, max_value=5).filter(lambda p: p != 0),
    st.integers(min_value=0, max_value=30),
)
def test_cover_affine_covariance(a, p, q):
    shift = q if p > 0 else q + max(abs(p) * x for x in a.elements)
    image = IntSet([p * x + shift for x in a.elements])
    assert ap_cover(image).length == ap_cover(a).length
    c1, c2 = bp_cover(a), bp_cover(image)
    if c1 is None:
        assert c2 is None
    else:
        assert c2 is not None and c2.total_length == c1.total_length


@given(
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=2, max_value=8),
    st.integers(min_value=0, max_value=60),
    st.integers(min_value=2, max_value=8),
)
def test_bp_doubling_identity(s1, d, l1, s2, l2):
    # A valid BP with both windows of size >= 2 has |2B| = 3|B| - 3 exactly.
    i, j = ApWindow(s1, d, l1), ApWindow(s2, d, l2)
    if not is_valid_bp(i, j):
        return
    b = BpCover(I=i, J=j).materialize()
    assert doubling_size(b) == 3 * (l1 + l2) - 3


# --- bp_cover_within ------------------------------------------------------------

def test_bp_within_at_budget():
    c = bp_cover_within(IntSet(list(range(13)) + [45, 57]), 26)
    assert c is not None and c.total_length == 26


def test_bp_within_below_minimum():
    assert bp_cover_within(IntSet(list(range(13)) + [45, 57]), 25) is None


def test_bp_within_generous_budget():
    c = bp_cover_within(IntSet([0, 1, 3, 4, 6]), 5)
    assert c is not None and c.total_length <= 5


@settings(max_examples=100, deadline=None)
@given(small_sets, st.integers(min_value=2, max_value=30))
def test_bp_within_consistent_with_minimum(a, budget):
    minimum = bp_cover(a)
    got = bp_cover_within(a, budget)
    if minimum is None or minimum.total_length > budget:
        assert got is None
    else:
        assert got is not None
        assert got.total_length <= budget
        assert is_valid_bp(got.I, got.J)
