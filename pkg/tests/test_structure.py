"""Residue decompositions, fullness, and triangle profiles."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sumstruct.intset import IntSet
from sumstruct.structure import (
    residue_decomposition,
    triangle_profile,
)
from sumstruct.sumset import sumset

sets_strategy = st.lists(
    st.integers(min_value=0, max_value=60), min_size=1, max_size=20
).map(lambda xs: IntSet(xs))


# --- residue_decomposition -----------------------------------------------------

def test_full_even_interval():
    dec = residue_decomposition(IntSet([0, 2, 4, 6]), 2)
    assert dec.modulus == 2
    assert len(dec.classes) == 1
    cls = dec.classes[0]
    assert (cls.residue, cls.lo, cls.hi) == (0, 0, 6)
    assert cls.fullness == 1
    assert cls.is_full(Fraction(1, 20))


def test_two_full_classes():
    dec = residue_decomposition(IntSet([0, 3, 6, 1, 4]), 3)
    assert [(c.residue, c.fullness) for c in dec.classes] == [(0, 1), (1, 1)]
    assert dec.classes[0].subset.elements == (0, 3, 6)
    assert dec.classes[1].subset.elements == (1, 4)


def test_partial_class_ratio():
    dec = residue_decomposition(IntSet([0, 4, 6]), 2)
    cls = dec.classes[0]
    assert cls.fullness == Fraction(3, 4)
    assert cls.is_full(Fraction(3, 10))
    assert not cls.is_full(Fraction(1, 5))


def test_modulus_one_single_class():
    dec = residue_decomposition(IntSet([0, 1, 5]), 1)
    assert len(dec.classes) == 1
    assert dec.classes[0].fullness == Fraction(3, 6)


def test_modulus_validated():
    with pytest.raises(ValueError):
        residue_decomposition(IntSet([0, 1]), 0)


@given(sets_strategy, st.integers(min_value=1, max_value=9))
def test_classes_partition_the_set(a, d):
    dec = residue_decomposition(a, d)
    rebuilt = sorted(x for c in dec.classes for x in c.subset.elements)
    assert rebuilt == list(a.elements)
    for c in dec.classes:
        assert 0 < c.fullness <= 1
        assert all(x % d == c.residue for x in c.subset.elements)
        assert c.lo == c.subset.min and c.hi == c.subset.max
    residues = [c.residue for c in dec.classes]
    assert residues == sorted(residues)


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=1, max_value=8),
       st.integers(min_value=1, max_value=12))
def test_complete_ap_is_full(start, d, length):
    a = IntSet(range(start, start + length * d, d))
    dec = residue_decomposition(a, d)
    assert len(dec.classes) == 1
    assert dec.classes[0].fullness == 1


# --- triangle_profile ------------------------------------------------------------

def test_prefix_block_is_forward():
    a = IntSet(range(0, 11))
    v = triangle_profile(a, (0, 20), 0.05)
    assert v.kind == "forward"
    assert v.window == (0, 20)
    assert v.margin == Fraction(1, 20)


def test_suffix_block_is_backward():
    a = IntSet(range(10, 21))
    assert triangle_profile(a, (0, 20), 0.05).kind == "backward"


def test_uniform_half_density_is_neither():
    a = IntSet(range(0, 21, 2))
    assert triangle_profile(a, (0, 20), 0.05).kind == "neither"


def test_degenerate_window_rejected():
    with pytest.raises(ValueError):
        triangle_profile(IntSet([0, 5]), (3, 3), 0.05)


def test_window_wider_than_set_is_allowed():
    # Windows describe an ambient range; only the intersection counts.
    verdict = triangle_profile(IntSet([5, 10]), (0, 10), 0.05)
    assert verdict.kind == "neither"


def test_theta_range_validated():
    a = IntSet(range(0, 11))
    for bad in (0, 0.25, 0.3, -0.1):
        with pytest.raises(ValueError):
            triangle_profile(a, (0, 10), bad)


def test_theta_accepts_string_and_fraction():
    a = IntSet(range(0, 11))
    k1 = triangle_profile(a, (0, 20), "0.05").kind
    k2 = triangle_profile(a, (0, 20), Fraction(1, 20)).kind
    assert k1 == k2 == "forward"


@settings(max_examples=150, deadline=None)
@given(sets_strategy, st.sampled_from(["0.05", "0.1", "0.2"]))
def test_reflection_duality(a, theta):
    if a.span < 2:
        return
    lo, hi = a.min, a.max
    pivot = lo + hi
    ra = IntSet([pivot - x for x in a.elements])
    t = triangle_profile(a, (lo, hi), theta)
    tr = triangle_profile(ra, (lo, hi), theta)
    assert (t.kind == "neither") == (tr.kind == "neither")
    if t.kind == "forward":
        assert tr.kind in ("forward", "backward")
    if t.kind == "backward":
        assert tr.kind in ("forward", "backward")
        # the reflection of a strictly backward profile is strictly forward
        if tr.kind == "backward":
            assert triangle_profile(ra, (lo, hi), theta).kind != "neither"


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=200, max_value=420),
    st.data(),
)
def test_forward_triangle_fills_sumset_window(w, data):
    # Build a forward triangle: a full prefix long enough to carry the
    # prefix-density condition through the checked range, plus sparse noise.
    theta = Fraction(1, 20)
    c2 = Fraction(1, 2) + theta * theta
    p = math.ceil(c2 * (1 - theta) * w)
    cap = math.floor((Fraction(1, 2) + theta) * w)
    budget = cap - (p + 1)
    extras = data.draw(
        st.lists(st.integers(min_value=p + 1, max_value=w), max_size=max(0, budget), unique=True)
    )
    a = IntSet(list(range(p + 1)) + extras)
    assert triangle_profile(a, (0, w), theta).kind == "forward"

    two_a = set(sumset(a, a).elements)
    t1 = theta * w
    t2 = (1 - theta) * w
    lo_i, hi_i = math.ceil(t1), math.floor(t2)
    best = run = 0
    for x in range(lo_i, hi_i + 1):
        run = run + 1 if x in two_a else 0
        best = max(best, run)
    assert best >= (1 - 4 * theta) * (t2 - t1)
