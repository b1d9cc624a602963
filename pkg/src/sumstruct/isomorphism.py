"""F2-isomorphism testing, F2-progression rank, and two-lines embeddings.

A bijection phi between two sets (in Z or Z^2) is an F2-isomorphism when
a1 + a2 = a3 + a4 holds iff phi(a1) + phi(a2) = phi(a3) + phi(a4). This is
exactly the statement that phi preserves the partition of index pairs by
their sums, which yields a fast fingerprint check: group source pairs by
sum, then require image sums to be constant within each group and distinct
across groups. The O(k^4) definitional check is kept alongside and the two
must agree (tested exhaustively at small k).

The carriers are Z (as IntSet) and Z^2 (as PlanarSet) — the only two the
theory needs: a set covered by a valid bi-arithmetic progression embeds into
the canonical "two lines" planar set {(i,0)} | {(j,1)} by position, and that
positional map is always an F2-isomorphism because the three window sumsets
are disjoint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import ParseError
from .intset import IntSet
from .progressions import BpCover, is_valid_bp
from .sumset import SumsetStats

__all__ = [
    "PlanarSet",
    "F2Progression",
    "parse_planar",
    "render_planar",
    "is_f2_isomorphism",
    "f2_rank",
    "embed_bp_as_two_lines",
    "planar_sumset_stats",
]


class PlanarSet:
    """Immutable set of integer points in the plane, sorted lexicographically."""

    __slots__ = ("_points",)

    def __init__(self, points: Iterable):
        pts = sorted({(int(x), int(y)) for x, y in points})
        if not pts:
            raise ValueError("PlanarSet must be nonempty")
        self._points = tuple(pts)

    @property
    def points(self) -> tuple:
        return self._points

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self._points)

    def __eq__(self, other) -> bool:
        if isinstance(other, PlanarSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PlanarSet({render_planar(self)!r})"


_POINT = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def parse_planar(text: str) -> PlanarSet:
    """Parse a planar literal ``(x,y);(x,y);...``."""
    points = []
    offset = 0
    for chunk in text.split(";"):
        stripped = chunk.strip()
        term_offset = offset + len(chunk) - len(chunk.lstrip())
        if stripped:
            m = _POINT.match(stripped)
            if m is None:
                raise ParseError(f"malformed point {stripped!r}", term_offset)
            points.append((int(m.group(1)), int(m.group(2))))
        offset += len(chunk) + 1
    if not points:
        raise ParseError("empty planar literal", 0)
    return PlanarSet(points)


def render_planar(p: PlanarSet) -> str:
    return ";".join(f"({x},{y})" for x, y in p.points)


Carrier = Union[IntSet, PlanarSet]


def _elements_of(s: Carrier) -> tuple:
    if isinstance(s, IntSet):
        return s.elements
    if isinstance(s, PlanarSet):
        return s.points
    raise TypeError(f"expected IntSet or PlanarSet, got {type(s).__name__}")


def _add(u, v):
    if isinstance(u, tuple):
        return (u[0] + v[0], u[1] + v[1])
    return u + v


def _canonical_element(x):
    if isinstance(x, (tuple, list)):
        return (int(x[0]), int(x[1]))
    return int(x)


def _fingerprint_iso(src: Sequence, dst: Sequence) -> bool:
    """Partition-of-pair-sums equality: constant within source sum classes,
    distinct across them."""
    k = len(src)
    groups = {}
    for i in range(k):
        si = src[i]
        for j in range(i, k):
            groups.setdefault(_add(si, src[j]), []).append((i, j))
    seen = set()
    for pairs in groups.values():
        i0, j0 = pairs[0]
        target = _add(dst[i0], dst[j0])
        for i, j in pairs[1:]:
            if _add(dst[i], dst[j]) != target:
                return False
        if target in seen:
            return False
        seen.add(target)
    return True


def _definitional_iso(src: Sequence, dst: Sequence) -> bool:
    """Direct quadruple check of the sum-equality equivalence."""
    k = len(src)
    for i1 in range(k):
        for i2 in range(i1, k):
            s = _add(src[i1], src[i2])
            t = _add(dst[i1], dst[i2])
            for i3 in range(k):
                for i4 in range(i3, k):
                    if (s == _add(src[i3], src[i4])) != (t == _add(dst[i3], dst[i4])):
                        return False
    return True


def is_f2_isomorphism(a: Carrier, b: Carrier, phi: Sequence, method: str = "fingerprint") -> bool:
    """Whether the pairing ``phi`` is an F2-isomorphism from a onto b.

    ``phi`` lists the image of each element of ``a`` in sorted source
    order, and must be a permutation of the elements of ``b``.
    ``method`` selects the sum-fingerprint fast path (default) or the
    O(k^4) definitional check; the two always agree.
    """
    src = _elements_of(a)
    dst_universe = _elements_of(b)
    dst = tuple(_canonical_element(x) for x in phi)
    if len(dst) != len(src) or len(dst) != len(dst_universe) or set(dst) != set(dst_universe):
        raise ValueError("phi is not a bijection from a onto b")
    if method == "fingerprint":
        return _fingerprint_iso(src, dst)
    if method == "definitional":
        return _definitional_iso(src, dst)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class F2Progression:
    """The two-parameter grid image P(x0; x1, x2; b1, b2) =
    {x0 + i*x1 + j*x2 : 0 <= i < b1, 0 <= j < b2}.

    Proper (an actual F2-progression) iff the grid map is injective and an
    F2-isomorphism; rank 2 when b2 > 1, rank 1 when b2 = 1.
    """

    x0: int
    x1: int
    x2: int
    b1: int
    b2: int

    def __post_init__(self):
        if self.b2 < 1 or self.b1 < self.b2:
            raise ValueError(f"need b1 >= b2 >= 1, got b1={self.b1}, b2={self.b2}")

    def grid_points(self) -> list:
        return [(i, j) for i in range(self.b1) for j in range(self.b2)]

    def values(self) -> list:
        return [self.x0 + i * self.x1 + j * self.x2 for (i, j) in self.grid_points()]


def f2_rank(p: F2Progression) -> Optional[int]:
    """1 or 2 for a proper F2-progression (by b2), None when improper.

    Improper means the grid map fails injectivity or the F2 condition; the
    caller distinguishes that from rank via the None return.
    """
    values = p.values()
    if len(set(values)) != len(values):
        return None
    if not _fingerprint_iso(p.grid_points(), values):
        return None
    return 2 if p.b2 > 1 else 1


def embed_bp_as_two_lines(c: BpCover, a: IntSet):
    """Positional embedding of a BP-covered set onto the two-lines planar set.

    Elements in window I map to ((x - I.start)/d, 0) and elements in J to
    ((x - J.start)/d, 1). Returns (PlanarSet, phi) with phi aligned to the
    sorted elements of ``a``; the pairing is always an F2-isomorphism for a
    valid cover. Raises ValueError when the cover is invalid or does not
    contain ``a``.
    """
    if not is_valid_bp(c.I, c.J):
        raise ValueError("cover is not a valid bi-arithmetic progression")
    d = c.diff
    phi = []
    for x in a.elements:
        if c.I.start <= x <= c.I.end and (x - c.I.start) % d == 0:
            phi.append(((x - c.I.start) // d, 0))
        elif c.J.start <= x <= c.J.end and (x - c.J.start) % d == 0:
            phi.append(((x - c.J.start) // d, 1))
        else:
            raise ValueError(f"element {x} is not covered by the bi-progression")
    return PlanarSet(phi), phi


def planar_sumset_stats(p: PlanarSet) -> SumsetStats:
    """k, |2P|, and deficiency for a planar set under componentwise addition.

    The span field reports the Chebyshev extent (the larger of the two
    coordinate ranges).
    """
    pts = p.points
    sums = {(u[0] + v[0], u[1] + v[1]) for u in pts for v in pts}
    k = len(pts)
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    return SumsetStats(k=k, doubling=len(sums), deficiency_b=len(sums) - (3 * k - 3), span=span)
