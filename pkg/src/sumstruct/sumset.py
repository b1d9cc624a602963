"""Sumsets A+B, the doubling |2A|, deficiency statistics, and the
Lev-Smeliansky lower bound.

Two engines compute sumsets and must agree bit-exactly:

* sparse: vectorized k_a * k_b pairwise sums, deduplicated — wins when the
  pair count is small or the output span is too large to materialize;
* dense: an indicator-vector convolution over [0, span_a + span_b], either
  by bit-mask shift-OR (small spans) or by real FFT with a 0.5 threshold
  (large spans). Counts are integers and the FFT error is orders of
  magnitude below 0.5 at the supported sizes, so thresholding is exact.

The crossovers live in :mod:`sumstruct.config`; ``engine="auto"`` picks per
input, and callers can force either engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.fft

from . import config
from .errors import InapplicableError
from .intset import IntSet

__all__ = [
    "SumsetStats",
    "sumset",
    "doubling_size",
    "stats",
    "lev_smeliansky_bound",
]

_OUTER_CHUNK = 1 << 22  # pairwise-sum entries processed per sparse chunk


@dataclass(frozen=True)
class SumsetStats:
    """Cardinality, doubling, signed deficiency, and span of a set.

    ``deficiency_b`` is b3 = |2A| - (3k-3), the deficiency against the
    3k-3 benchmark; it is signed and never clamped. The companion
    ``deficiency_b2`` = |2A| - (2k-1) measures against the minimum possible
    doubling and serves the small-doubling regime.
    """

    k: int
    doubling: int
    deficiency_b: int
    span: int

    @property
    def deficiency_b2(self) -> int:
        return self.doubling - (2 * self.k - 1)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "doubling": self.doubling,
            "b3": self.deficiency_b,
            "b2": self.deficiency_b2,
            "span": self.span,
        }


# --- engines -------------------------------------------------------------------


def _sparse_values(a: IntSet, b: IntSet) -> np.ndarray:
    """Sorted distinct pairwise sums via chunked vectorized outer addition."""
    xs = a.as_array()
    ys = b.as_array()
    rows = max(1, _OUTER_CHUNK // len(ys))
    chunks = []
    for i in range(0, len(xs), rows):
        block = (xs[i : i + rows, None] + ys[None, :]).ravel()
        chunks.append(np.unique(block))
    if len(chunks) == 1:
        return chunks[0]
    return np.unique(np.concatenate(chunks))


def _bitset_acc(a: IntSet, b: IntSet) -> int:
    """Shift-OR accumulator over the translated output range."""
    # Shifting the longer-span mask by each element of the other set costs
    # len(other) * span(mask) bit-ops; pick the cheaper orientation.
    if len(b) * a.span <= len(a) * b.span:
        mask_set, step_set = a, b
    else:
        mask_set, step_set = b, a
    m = mask_set.mask()
    base = step_set.min
    acc = 0
    for y in step_set.elements:
        acc |= m << (y - base)
    return acc


def _bits_to_values(acc: int, offset: int) -> np.ndarray:
    nbytes = (acc.bit_length() + 7) // 8
    buf = np.frombuffer(acc.to_bytes(nbytes, "little"), dtype=np.uint8)
    bits = np.unpackbits(buf, bitorder="little")
    return np.flatnonzero(bits).astype(np.int64) + offset


def _fft_counts(a: IntSet, b: IntSet) -> np.ndarray:
    """Convolution of indicator vectors; entry s counts pairs summing to s."""
    la = a.span + 1
    lb = b.span + 1
    out_len = la + lb - 1
    n = scipy.fft.next_fast_len(out_len, real=True)
    ind_a = np.zeros(n, dtype=np.float64)
    ind_a[a.as_array() - a.min] = 1.0
    fa = scipy.fft.rfft(ind_a)
    if a is b or a == b:
        fb = fa
    else:
        ind_b = np.zeros(n, dtype=np.float64)
        ind_b[b.as_array() - b.min] = 1.0
        fb = scipy.fft.rfft(ind_b)
    conv = scipy.fft.irfft(fa * fb, n)
    return conv[:out_len]


def _pick_engine(a: IntSet, b: IntSet, engine: str) -> str:
    if engine not in ("auto", "dense", "sparse"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine != "auto":
        return engine
    out_span = a.span + b.span
    if len(a) * len(b) <= config.SPARSE_PAIR_LIMIT or out_span > config.DENSE_SPAN_LIMIT:
        return "sparse"
    return "dense"


def sumset(a: IntSet, b: IntSet, engine: str = "auto") -> IntSet:
    """The set {x + y : x in a, y in b}; ``sumset(a, a)`` is 2A."""
    chosen = _pick_engine(a, b, engine)
    offset = a.min + b.min
    if chosen == "sparse":
        return IntSet._from_sorted_array(_sparse_values(a, b))
    if a.span + b.span <= config.DENSE_BITSET_SPAN_LIMIT:
        return IntSet._from_sorted_array(_bits_to_values(_bitset_acc(a, b), offset))
    counts = _fft_counts(a, b)
    return IntSet._from_sorted_array(np.flatnonzero(counts > 0.5).astype(np.int64) + offset)


def doubling_size(a: IntSet, engine: str = "auto") -> int:
    """|2A| without materializing the sumset when the engine allows it."""
    chosen = _pick_engine(a, a, engine)
    if chosen == "sparse":
        return len(_sparse_values(a, a))
    if 2 * a.span <= config.DENSE_BITSET_SPAN_LIMIT:
        return _bitset_acc(a, a).bit_count()
    return int(np.count_nonzero(_fft_counts(a, a) > 0.5))


def stats(a: IntSet) -> SumsetStats:
    """k, |2A|, b3 = |2A| - (3k-3), and span of ``a``."""
    k = len(a)
    d = doubling_size(a)
    return SumsetStats(k=k, doubling=d, deficiency_b=d - (3 * k - 3), span=a.span)


def lev_smeliansky_bound(a: IntSet, b: IntSet) -> int:
    """Lower bound for |A+B|: min{m+|B|, |A|+2|B|-3} when the translated
    sets share maximum m, and min{m+|B|, |A|+2|B|-2} when max A is larger.

    Both sets are translated to start at 0 and swapped if needed so the
    first has the larger maximum; the translated first set must then have
    gcd 1. Unmeetable hypotheses raise :class:`InapplicableError`.
    """
    if len(a) < 2 or len(b) < 2:
        raise InapplicableError("both sets need at least two elements")
    xs = tuple(x - a.min for x in a.elements)
    ys = tuple(y - b.min for y in b.elements)
    if xs[-1] < ys[-1]:
        xs, ys = ys, xs
    if math.gcd(*xs) != 1:
        raise InapplicableError("translated set with larger maximum must have gcd 1")
    m, n = xs[-1], ys[-1]
    if m == n:
        return min(m + len(ys), len(xs) + 2 * len(ys) - 3)
    return min(m + len(ys), len(xs) + 2 * len(ys) - 2)
