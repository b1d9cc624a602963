"""Structural feature extraction: residue decompositions and triangle profiles.

Both features finitize asymptotic notions with an explicit rational margin
theta in (0, 1/4):

* a residue class is "full" when it occupies at least a 1-theta fraction of
  the positions of its covering progression between its extremes;
* a window holds a forward triangle when the set fills at most a
  (1/2 + theta) fraction of the window overall, yet every prefix inside the
  central (1 - 2 theta) portion has counting density at least 1/2 + theta^2.

All arithmetic is exact (fractions.Fraction); theta-dependent claims are
property-tested with explicit margins, never asserted asymptotically.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from .intset import IntSet

__all__ = [
    "ResidueClass",
    "ResidueDecomposition",
    "TriangleVerdict",
    "residue_decomposition",
    "triangle_profile",
]

Theta = Union[str, float, Fraction]


def _as_fraction(theta: Theta) -> Fraction:
    """Exact value from a float (via its shortest decimal), string, or Fraction."""
    if isinstance(theta, Fraction):
        return theta
    if isinstance(theta, str):
        return Fraction(theta)
    if isinstance(theta, float):
        return Fraction(str(theta))
    if isinstance(theta, int):
        return Fraction(theta)
    raise ValueError(f"cannot interpret margin {theta!r}")


def _as_theta(theta: Theta) -> Fraction:
    """Triangle margin: must lie strictly between 0 and 1/4."""
    frac = _as_fraction(theta)
    if not Fraction(0) < frac < Fraction(1, 4):
        raise ValueError(f"margin must lie in (0, 1/4), got {frac}")
    return frac


@dataclass(frozen=True)
class ResidueClass:
    """One residue class of a decomposition: A_r = A intersect (r + d*Z)."""

    residue: int
    subset: IntSet
    lo: int
    hi: int
    fullness: Fraction

    def is_full(self, theta: Theta) -> bool:
        """Whether the class fills at least a 1-theta fraction of its range."""
        frac = _as_fraction(theta)
        if not Fraction(0) < frac < Fraction(1):
            raise ValueError(f"fullness threshold must lie in (0, 1), got {frac}")
        return self.fullness >= 1 - frac

    def to_dict(self) -> dict:
        return {
            "residue": self.residue,
            "elements": list(self.subset.elements),
            "lo": self.lo,
            "hi": self.hi,
            "fullness": [self.fullness.numerator, self.fullness.denominator],
        }


@dataclass(frozen=True)
class ResidueDecomposition:
    """Partition of a set by residue mod d, with per-class extremes and
    fullness |A_r| * d / (u_r - l_r + d) — ratio 1 means the class is a
    complete progression between its extremes."""

    modulus: int
    classes: Tuple[ResidueClass, ...]

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "classes": [c.to_dict() for c in self.classes],
        }


def residue_decomposition(a: IntSet, d: int) -> ResidueDecomposition:
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    groups: dict = {}
    for x in a.elements:
        groups.setdefault(x % d, []).append(x)
    classes = []
    for r in sorted(groups):
        els = groups[r]
        lo, hi = els[0], els[-1]
        classes.append(
            ResidueClass(
                residue=r,
                subset=IntSet._from_sorted_tuple(tuple(els)),
                lo=lo,
                hi=hi,
                fullness=Fraction(len(els) * d, hi - lo + d),
            )
        )
    return ResidueDecomposition(modulus=d, classes=tuple(classes))


@dataclass(frozen=True)
class TriangleVerdict:
    """Profile of a window: forward, backward, or neither, at margin theta."""

    kind: str
    window: Tuple[int, int]
    margin: Fraction

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "window": list(self.window),
            "margin": [self.margin.numerator, self.margin.denominator],
        }


def _forward_holds(els: Sequence[int], lo: int, hi: int, theta: Fraction) -> bool:
    """The forward-triangle inequalities for els = sorted(A intersect [lo, hi]).

    Size: |A cap window| <= (1/2 + theta)(hi - lo). Prefix: for every real
    x in [lo + theta*w, hi - theta*w], the count of A in [lo, x] is at least
    (1/2 + theta^2)(x - lo). The count is a step function jumping at
    elements, so the prefix condition is checked at the supremum of each
    constant piece — exactly, in rational arithmetic.
    """
    w = hi - lo
    if len(els) > (Fraction(1, 2) + theta) * w:
        return False
    c = Fraction(1, 2) + theta * theta
    x_min = lo + theta * w
    x_max = hi - theta * w
    # Piece m (count value m) spans [prev, nxt) with prev = els[m-1]
    # (or the window start for m = 0) and nxt = els[m] (or +infinity).
    for m in range(len(els) + 1):
        prev = lo if m == 0 else els[m - 1]
        nxt = els[m] if m < len(els) else None
        if prev > x_max:
            break
        if nxt is not None and Fraction(nxt) <= x_min:
            continue
        sup = x_max if nxt is None else min(Fraction(nxt), x_max)
        if m < c * (sup - lo):
            return False
    return True


def triangle_profile(a: IntSet, window: Tuple[int, int], theta: Theta) -> TriangleVerdict:
    """Classify a window of a set as forward triangle, backward triangle, or
    neither, at an explicit margin.

    Backward is defined by reflection: the window is backward when the set
    reflected about lo+hi profiles as forward. When both orientations hold,
    forward wins.
    """
    frac = _as_theta(theta)
    lo, hi = window
    if hi <= lo:
        raise ValueError(f"degenerate window {window}")
    left = bisect_right(a.elements, lo - 1)
    right = bisect_right(a.elements, hi)
    inside = a.elements[left:right]
    if _forward_holds(inside, lo, hi, frac):
        kind = "forward"
    else:
        reflected = tuple(sorted(lo + hi - x for x in inside))
        kind = "backward" if _forward_holds(reflected, lo, hi, frac) else "neither"
    return TriangleVerdict(kind=kind, window=(lo, hi), margin=frac)
