"""Arithmetic-progression and bi-arithmetic-progression covers.

An AP window is {start + i*diff : 0 <= i < length}. A bi-arithmetic
progression (BP) is a union I | J of two windows with the same difference
whose sumsets I+I, I+J, J+J are pairwise disjoint. The covers produced here
are the structural objects bounded by the inverse theorems: the unique
minimal AP containing a set, and a minimum-total-length valid BP containing
it (or the fact that none exists).

The BP search space is exact, not heuristic (see docs/design.md for the two
supporting lemmas):

* differences beyond span(a) are never needed for |a| >= 3, because such a
  window meets [min a, max a] in at most one point and two windows cannot
  hold three elements;
* for each difference d, the elements of a fall into residue classes mod d.
  Three or more classes cannot be covered by two single-class windows. Two
  classes force the partition. Within a single class, any valid two-window
  cover induces a cover by an order split (prefix/suffix in class order)
  with windows no longer, so only the k-1 order splits need checking.

Shrinking windows shrinks their sumsets, so minimal windows over each part
are valid whenever any valid extension is — checking minimal windows only
loses nothing. Both facts are cross-checked against an unpruned brute-force
oracle in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .intset import IntSet

__all__ = [
    "ApWindow",
    "BpCover",
    "ap_cover",
    "is_valid_bp",
    "bp_cover",
    "bp_cover_within",
]

import math


@dataclass(frozen=True)
class ApWindow:
    """The arithmetic progression {start + i*diff : 0 <= i < length}."""

    start: int
    diff: int
    length: int

    def __post_init__(self):
        if self.diff < 1:
            raise ValueError(f"diff must be positive, got {self.diff}")
        if self.length < 1:
            raise ValueError(f"length must be positive, got {self.length}")

    @property
    def end(self) -> int:
        return self.start + (self.length - 1) * self.diff

    def materialize(self) -> IntSet:
        return IntSet(range(self.start, self.end + 1, self.diff))

    def to_dict(self) -> dict:
        return {"start": self.start, "diff": self.diff, "length": self.length}


@dataclass(frozen=True)
class BpCover:
    """A bi-arithmetic progression I | J with a shared difference.

    When produced by :func:`bp_cover`, both windows contain at least one
    element of the covered set and I is the window with the smaller start.
    """

    I: ApWindow
    J: ApWindow

    def __post_init__(self):
        if self.I.diff != self.J.diff:
            raise ValueError(
                f"BP windows must share a difference, got {self.I.diff} and {self.J.diff}"
            )

    @property
    def diff(self) -> int:
        return self.I.diff

    @property
    def total_length(self) -> int:
        return self.I.length + self.J.length

    @property
    def has_singleton(self) -> bool:
        return self.I.length == 1 or self.J.length == 1

    def materialize(self) -> IntSet:
        return IntSet(
            list(self.I.materialize().elements) + list(self.J.materialize().elements)
        )

    def to_dict(self) -> dict:
        return {
            "I": self.I.to_dict(),
            "J": self.J.to_dict(),
            "total_length": self.total_length,
            "has_singleton": self.has_singleton,
        }


def ap_cover(a: IntSet) -> ApWindow:
    """The unique minimal-length AP containing ``a``.

    Any AP containing ``a`` has a difference dividing every gap from
    min(a), hence dividing their gcd; the gcd itself therefore gives the
    shortest cover: start = min(a), diff = gcd(a - min a),
    length = span/diff + 1. Singletons get the convention (x, 1, 1).
    """
    els = a.elements
    if len(els) == 1:
        return ApWindow(els[0], 1, 1)
    lo = els[0]
    diff = math.gcd(*[x - lo for x in els])
    return ApWindow(lo, diff, a.span // diff + 1)


def _same_step_disjoint(lo1: int, hi1: int, lo2: int, hi2: int, d: int) -> bool:
    """Disjointness of {lo1, lo1+d, ..., hi1} and {lo2, lo2+d, ..., hi2}."""
    if (lo1 - lo2) % d:
        return True
    return max(lo1, lo2) > min(hi1, hi2)


def is_valid_bp(I: ApWindow, J: ApWindow) -> bool:
    """Whether I+I, I+J, J+J are pairwise disjoint.

    All three sumsets are again APs with the shared step d, so disjointness
    reduces to O(1) arithmetic: two same-step windows are disjoint iff their
    anchors differ mod d or their closed ranges do not overlap. The tests
    verify this against materialized brute-force sumsets.
    """
    if I.diff != J.diff:
        raise ValueError(f"windows must share a difference, got {I.diff} and {J.diff}")
    d = I.diff
    ii = (2 * I.start, 2 * I.end)
    ij = (I.start + J.start, I.end + J.end)
    jj = (2 * J.start, 2 * J.end)
    return (
        _same_step_disjoint(*ii, *ij, d=d)
        and _same_step_disjoint(*ii, *jj, d=d)
        and _same_step_disjoint(*ij, *jj, d=d)
    )


def _candidates(a: IntSet) -> Iterator[BpCover]:
    """Every minimal-window candidate cover, in deterministic scan order.

    For each difference d in [1, span] the partition of ``a`` is either
    forced (two residue classes) or an order split (one class); parts are
    wrapped in their minimal windows. Candidates are yielded with
    ascending d, then ascending split point; validity is not checked here.
    """
    els = a.elements
    k = len(els)
    span = a.span

    def window(part: tuple, d: int) -> ApWindow:
        return ApWindow(part[0], d, (part[-1] - part[0]) // d + 1)

    def ordered(p1: tuple, p2: tuple, d: int) -> BpCover:
        w1, w2 = window(p1, d), window(p2, d)
        if w1.start > w2.start:
            w1, w2 = w2, w1
        return BpCover(I=w1, J=w2)

    for d in range(1, span + 1):
        residues = {x % d for x in els}
        if len(residues) > 2:
            continue
        if len(residues) == 2:
            r0 = els[0] % d
            p1 = tuple(x for x in els if x % d == r0)
            p2 = tuple(x for x in els if x % d != r0)
            yield ordered(p1, p2, d)
        else:
            for i in range(1, k):
                yield ordered(els[:i], els[i:], d)


def bp_cover(a: IntSet) -> Optional[BpCover]:
    """A minimum-total-length valid BP containing ``a``, or None.

    Both windows intersect ``a`` by construction. Ties are broken by
    smallest difference, then smallest I.start, then smallest I.length,
    making the output deterministic. Pairs are covered by the trivial
    singleton-window split; for a singleton no BP exists (both windows
    would need to contain the point, colliding in every sumset).
    """
    if len(a) < 2:
        return None
    best = None
    best_key = None
    for cand in _candidates(a):
        key = (cand.total_length, cand.diff, cand.I.start, cand.I.length)
        if best_key is not None and key >= best_key:
            continue
        if is_valid_bp(cand.I, cand.J):
            best, best_key = cand, key
    return best


def bp_cover_within(a: IntSet, budget: int) -> Optional[BpCover]:
    """The first valid BP cover with total_length <= budget in scan order.

    Short-circuits on the first hit, so the result may differ from the
    tie-broken minimum returned by :func:`bp_cover`; None means the minimum
    exceeds the budget.
    """
    if len(a) < 2:
        return None
    for cand in _candidates(a):
        if cand.total_length <= budget and is_valid_bp(cand.I, cand.J):
            return cand
    return None
