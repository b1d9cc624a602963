"""Finite sets of non-negative integers: parsing, rendering, normalization.

The central value type is :class:`IntSet`, an immutable strictly increasing
sequence of non-negative integers. Every analysis in the library consumes and
produces these. Normalization places a set into a canonical position for its
affine-equivalence class (translate the minimum to 0, divide out the gcd,
then pick the lexicographically smaller of the set and its reflection), so
exhaustive enumerations visit one representative per class.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "IntSet",
    "NormalForm",
    "parse_set",
    "render",
    "normalize",
    "affine_equivalent",
]

from .errors import ParseError


class IntSet:
    """Immutable, sorted, duplicate-free set of non-negative integers.

    Internally keeps the element tuple and lazily caches two alternative
    representations chosen per operation: a numpy array (for vectorized
    arithmetic) and a bit mask with bit ``i`` set iff ``i`` is an element
    (for dense sumset work). The caches never change observable behavior.
    """

    __slots__ = ("_elements", "_array", "_mask")

    def __init__(self, elements: Iterable[int]):
        els = sorted(set(elements))
        if not els:
            raise ValueError("IntSet must be nonempty")
        for x in els:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise ValueError(f"IntSet elements must be integers, got {x!r}")
        if els[0] < 0:
            raise ValueError(f"IntSet elements must be non-negative, got {els[0]}")
        self._elements = tuple(int(x) for x in els)
        self._array = None
        self._mask = None

    @classmethod
    def _from_sorted_array(cls, arr: np.ndarray) -> "IntSet":
        """Trusted constructor: arr must be strictly increasing and >= 0.

        The element tuple is materialized lazily so large engine outputs
        (millions of elements) stay as numpy arrays until someone actually
        walks them.
        """
        obj = cls.__new__(cls)
        obj._elements = None
        obj._array = arr
        obj._mask = None
        return obj

    @classmethod
    def _from_sorted_tuple(cls, els: tuple) -> "IntSet":
        """Trusted constructor: els must be strictly increasing and >= 0."""
        obj = cls.__new__(cls)
        obj._elements = els
        obj._array = None
        obj._mask = None
        return obj

    # -- accessors ------------------------------------------------------------

    @property
    def elements(self) -> tuple:
        if self._elements is None:
            self._elements = tuple(self._array.tolist())
        return self._elements

    @property
    def min(self) -> int:
        if self._elements is None:
            return int(self._array[0])
        return self._elements[0]

    @property
    def max(self) -> int:
        if self._elements is None:
            return int(self._array[-1])
        return self._elements[-1]

    @property
    def span(self) -> int:
        return self.max - self.min

    def as_array(self) -> np.ndarray:
        if self._array is None:
            self._array = np.fromiter(self._elements, dtype=np.int64, count=len(self._elements))
        return self._array

    def mask(self) -> int:
        """Bit mask of the translated set: bit (x - min) set iff x is an element."""
        if self._mask is None:
            rel = self.as_array() - self._elements[0]
            buf = np.zeros(self.span + 1, dtype=bool)
            buf[rel] = True
            self._mask = int.from_bytes(
                np.packbits(buf, bitorder="little").tobytes(), "little"
            )
        return self._mask

    # -- protocol -------------------------------------------------------------

    def __len__(self) -> int:
        if self._elements is None:
            return len(self._array)
        return len(self._elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        els = self.elements
        import bisect

        i = bisect.bisect_left(els, x)
        return i < len(els) and els[i] == x

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSet):
            return NotImplemented
        if self._array is not None and other._array is not None:
            return bool(np.array_equal(self._array, other._array))
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"IntSet({render(self)!r})"


@dataclass(frozen=True)
class NormalForm:
    """Canonical position of a set plus the transform that got it there.

    The original set is recovered by undoing the reflection (if any), then
    multiplying by ``scale`` and adding ``shift``.
    """

    set: IntSet
    shift: int
    scale: int
    reflected: bool


_TERM = re.compile(r"^(\d+)(?:-(\d+))?$")


def parse_set(text: str) -> IntSet:
    """Parse a set literal: comma-separated integers and inclusive ranges.

    Grammar: ``term(,term)*`` with ``term = int | int-int``. Whitespace
    around terms is ignored. Malformed tokens, descending ranges, and empty
    results raise :class:`ParseError` with the byte offset of the offending
    term.
    """
    values = []
    offset = 0
    for chunk in text.split(","):
        stripped = chunk.strip()
        term_offset = offset + len(chunk) - len(chunk.lstrip())
        if stripped:
            m = _TERM.match(stripped)
            if m is None:
                raise ParseError(f"malformed term {stripped!r}", term_offset)
            lo = int(m.group(1))
            if m.group(2) is None:
                values.append(lo)
            else:
                hi = int(m.group(2))
                if hi < lo:
                    raise ParseError(f"descending range {stripped!r}", term_offset)
                values.extend(range(lo, hi + 1))
        offset += len(chunk) + 1
    if not values:
        raise ParseError("empty set literal", 0)
    return IntSet(values)


def render(a: IntSet) -> str:
    """Canonical text form: maximal runs of consecutive integers as ranges."""
    els = a.elements
    parts = []
    i = 0
    while i < len(els):
        j = i
        while j + 1 < len(els) and els[j + 1] == els[j] + 1:
            j += 1
        if j > i:
            parts.append(f"{els[i]}-{els[j]}")
        else:
            parts.append(str(els[i]))
        i = j + 1
    return ",".join(parts)


def normalize(a: IntSet) -> NormalForm:
    """Canonical representative of the affine class of ``a``.

    Translate the minimum to 0, divide by the gcd of the translated elements
    (scale 1 for singletons), then replace by the reflection ``max - A`` when
    that is lexicographically smaller. Exact palindromes keep
    ``reflected=False``.
    """
    els = a.elements
    shift = els[0]
    translated = tuple(x - shift for x in els)
    if len(translated) > 1:
        scale = math.gcd(*translated)
        translated = tuple(x // scale for x in translated)
    else:
        scale = 1
    hi = translated[-1]
    reflection = tuple(hi - x for x in reversed(translated))
    if reflection < translated:
        return NormalForm(IntSet._from_sorted_tuple(reflection), shift, scale, True)
    return NormalForm(IntSet._from_sorted_tuple(translated), shift, scale, False)


def affine_equivalent(a: IntSet, b: IntSet) -> bool:
    """Whether some map x -> p*x + q with p != 0 sends a onto b."""
    return normalize(a).set == normalize(b).set
