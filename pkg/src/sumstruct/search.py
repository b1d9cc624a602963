"""Frontier search for structure-escaping sets, and the doubling-ratio census.

A size-k set "fails structure" when its deficiency b = |2A|-(3k-3) is
nonnegative, its minimal AP cover exceeds 2k-1+2b, and no valid
bi-progression covers it within total length k+b.  ``frontier_search``
hunts for failing sets with the smallest possible b at a given k: an
exhaustive scan of all canonical sets when that fits the node budget,
otherwise seeded random restarts with local moves (shift one element,
swap one element, translate a tail block).  The local moves are heuristics
with no completeness claim; only the exhaustive mode certifies absence.

Every returned record is rebuilt from its stored set — statistics and
covers are recomputed, never trusted from the search loop — so records
are self-certifying.  With a fixed seed, results are identical for any
worker count: restarts are independently seeded and merged by a
commutative union, and exhaustive shards are merged in span order.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, floor, gcd
from typing import Dict, Optional, Tuple

from .config import SEARCH_DEFAULT_BUDGET, SEARCH_KEEP_MARGIN, SEARCH_MOVES_PER_RESTART
from .intset import IntSet, render
from .progressions import ap_cover, bp_cover, bp_cover_within
from .sumset import SumsetStats, stats
from .verify import enumerate_canonical

__all__ = [
    "SearchRecord",
    "FrontierResult",
    "RatioBucket",
    "RatioHistogram",
    "frontier_search",
    "ratio_histogram",
]


@dataclass(frozen=True)
class SearchRecord:
    """One certified structure-failing set.

    ``frontier`` marks records whose b is minimal among all records found
    at this k; ``applicable`` marks sets inside the conjectured range
    3b < k-6, where a failure would be an actual counterexample."""

    set: IntSet
    k: int
    b: int
    ap_len: int
    bp_len: Optional[int]
    ratio: Fraction
    frontier: bool
    applicable: bool

    def to_dict(self) -> dict:
        return {
            "set": render(self.set),
            "k": self.k,
            "b": self.b,
            "ap_len": self.ap_len,
            "bp_len": self.bp_len,
            "ratio": [self.ratio.numerator, self.ratio.denominator],
            "frontier": self.frontier,
            "applicable": self.applicable,
        }


@dataclass(frozen=True)
class FrontierResult:
    """Search outcome: certified records plus how the ground was covered.
    ``exhaustive`` is False when the node budget forced randomized search,
    so absence of a record is then not evidence of absence."""

    k: int
    max_span: int
    records: Tuple[SearchRecord, ...]
    exhaustive: bool
    nodes: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "max_span": self.max_span,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "records": [r.to_dict() for r in self.records],
        }


@dataclass(frozen=True)
class RatioBucket:
    """Doubling ratios in [lo, lo + 1/10), split by structure status."""

    lo: Fraction
    structured: int
    unstructured: int


@dataclass(frozen=True)
class RatioHistogram:
    max_span: int
    buckets: Tuple[RatioBucket, ...]

    def to_dict(self) -> dict:
        return {
            "max_span": self.max_span,
            "buckets": [
                {
                    "lo": f"{float(b.lo):.1f}",
                    "structured": b.structured,
                    "unstructured": b.unstructured,
                }
                for b in self.buckets
            ],
        }


# --- shared evaluation ---------------------------------------------------------


def _is_structured(a: IntSet, st: SumsetStats, ap_len: int) -> bool:
    """AP/BP-coverable within the deficiency budgets: for b >= 0 an AP of
    length <= 2k-1+2b or a BP of total length <= k+b; for b < 0 (the
    small-doubling regime) an AP of length <= k+b2."""
    k, b = st.k, st.deficiency_b
    if b < 0:
        return ap_len <= k + st.deficiency_b2
    if ap_len <= 2 * k - 1 + 2 * b:
        return True
    return bp_cover_within(a, k + b) is not None


def _evaluate(els: Tuple[int, ...]):
    """(fails, b, ap_len) for a canonical element tuple."""
    a = IntSet._from_sorted_tuple(els)
    st = stats(a)
    ap_len = ap_cover(a).length
    b = st.deficiency_b
    fails = b >= 0 and not _is_structured(a, st, ap_len)
    return fails, b, ap_len


def _canonical(els) -> Tuple[int, ...]:
    """Translate min to 0, divide by the gcd, take the lex-smaller reflection."""
    lo = els[0]
    shifted = [x - lo for x in els]
    g = gcd(*shifted)
    if g > 1:
        shifted = [x // g for x in shifted]
    hi = shifted[-1]
    reflected = sorted(hi - x for x in shifted)
    return tuple(min(shifted, reflected))


# --- exhaustive mode -----------------------------------------------------------


def _exhaustive_chunk(k: int, spans) -> Tuple[list, int]:
    """Scan all canonical size-k sets with span in the given range; return
    failing (elements, b, ap_len) rows in enumeration order plus the count
    of sets evaluated."""
    found = []
    nodes = 0
    for span in spans:
        for interior in combinations(range(1, span), k - 2):
            els = (0, *interior, span)
            if gcd(*els) != 1:
                continue
            reflected = sorted(span - x for x in els)
            if reflected < list(els):
                continue
            nodes += 1
            fails, b, ap_len = _evaluate(els)
            if fails:
                found.append((els, b, ap_len))
    return found, nodes


# --- randomized mode -----------------------------------------------------------


def _random_start(rng: random.Random, k: int, max_span: int) -> Tuple[int, ...]:
    return tuple(sorted(rng.sample(range(max_span + 1), k)))


def _propose(
    rng: random.Random, cur: Tuple[int, ...], k: int, max_span: int
) -> Optional[Tuple[int, ...]]:
    """One local move, or None when no valid neighbor was found."""
    members = set(cur)
    for _ in range(12):
        roll = rng.random()
        if roll < 0.35:
            # shift one element a short distance
            i = rng.randrange(k)
            x = cur[i] + rng.choice((-3, -2, -1, 1, 2, 3))
            if 0 <= x <= max_span and x not in members:
                els = list(cur)
                els[i] = x
                return tuple(sorted(els))
        elif roll < 0.65:
            # swap one element for a fresh position
            x = rng.randrange(max_span + 1)
            if x not in members:
                els = list(cur)
                els[rng.randrange(k)] = x
                return tuple(sorted(els))
        else:
            # translate the tail block: compacts or widens one gap
            split = rng.randrange(1, k)
            delta = rng.choice((-8, -5, -3, -2, -1, 1, 2, 3, 5, 8))
            if (
                cur[split] + delta > cur[split - 1]
                and cur[-1] + delta <= max_span
                and cur[split] + delta >= 0
            ):
                return cur[:split] + tuple(x + delta for x in cur[split:])
    return None


def _score(fails: bool, b: int) -> Tuple[int, int]:
    """Lexicographic objective: reach a failing set, then minimize b.
    Structured sets with negative b (interval-like) score worse than
    structured sets sitting just above the b = 0 line."""
    if fails:
        return (0, b)
    return (1, b if b >= 0 else 2 - b)


def _restart_chunk(args) -> Tuple[Dict[Tuple[int, ...], Tuple[int, int]], int]:
    """Run a contiguous block of restarts; return found failing sets
    (canonical elements -> (b, ap_len)) and nodes used.  Per-restart RNGs
    are derived from the master seed, so the outcome of restart r does not
    depend on which worker ran it."""
    k, max_span, seed, restarts, moves = args
    found: Dict[Tuple[int, ...], Tuple[int, int]] = {}
    nodes = 0
    for r in restarts:
        rng = random.Random(f"{seed}:{r}")
        cache: Dict[Tuple[int, ...], Tuple[bool, int, int]] = {}

        def look(els):
            nonlocal nodes
            if els not in cache:
                cache[els] = _evaluate(els)
                nodes += 1
            return cache[els]

        evals = 0
        cur = _canonical(_random_start(rng, k, max_span))
        fails, b, ap_len = look(cur)
        evals += 1
        if fails:
            found[cur] = (b, ap_len)
        best = _score(fails, b)
        proposals = 0
        while evals < moves and proposals < 4 * moves:
            proposals += 1
            cand = _propose(rng, cur, k, max_span)
            if cand is None:
                break
            cand = _canonical(cand)
            known = cand in cache
            fails, b, ap_len = look(cand)
            if not known:
                evals += 1
            if fails and cand not in found:
                found[cand] = (b, ap_len)
            score = _score(fails, b)
            if score <= best:
                best = score
                cur = cand
    return found, nodes


# --- record assembly -----------------------------------------------------------


def _build_records(k: int, rows) -> Tuple[SearchRecord, ...]:
    """Certify and order raw failing rows.  Every field is recomputed from
    the stored elements; a disagreement with the search loop is a bug worth
    crashing on."""
    rows = sorted(rows, key=lambda row: (row[1], row[0]))
    records = []
    min_b = min((b for _, b, _ in rows), default=None)
    for els, b, ap_len in rows:
        a = IntSet._from_sorted_tuple(els)
        st = stats(a)
        ap = ap_cover(a)
        if st.k != k or st.deficiency_b != b or ap.length != ap_len:
            raise RuntimeError(f"record failed re-certification: {els}")
        if ap.length <= 2 * k - 1 + 2 * b:
            raise RuntimeError(f"record is AP-structured after all: {els}")
        bp = bp_cover(a)
        if bp is not None and bp.total_length <= k + b:
            raise RuntimeError(f"record is BP-structured after all: {els}")
        records.append(
            SearchRecord(
                set=a,
                k=k,
                b=b,
                ap_len=ap.length,
                bp_len=bp.total_length if bp is not None else None,
                ratio=Fraction(st.doubling, st.k),
                frontier=b == min_b,
                applicable=3 * b < k - 6,
            )
        )
    return tuple(records)


def frontier_search(
    k: int,
    max_span: int,
    budget: int = SEARCH_DEFAULT_BUDGET,
    seed: int = 0,
    workers: int = 1,
) -> FrontierResult:
    """Find structure-failing sets of size k with span at most max_span,
    minimizing the deficiency b.

    Exhaustive when the candidate count fits the budget (then the record
    list is complete); otherwise randomized restarts, keeping records
    with b within a small margin of the best found."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if max_span < 1:
        raise ValueError(f"max_span must be >= 1, got {max_span}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    candidates = sum(comb(s - 1, k - 2) for s in range(k - 1, max_span + 1))
    exhaustive = candidates <= budget

    if exhaustive:
        spans = range(k - 1, max_span + 1)
        if workers == 1 or len(spans) <= 1:
            parts = [_exhaustive_chunk(k, spans)]
        else:
            step = (len(spans) + workers - 1) // workers
            slices = [spans[i : i + step] for i in range(0, len(spans), step)]
            with multiprocessing.Pool(workers) as pool:
                parts = pool.starmap(_exhaustive_chunk, [(k, s) for s in slices])
        rows = [row for part, _ in parts for row in part]
        nodes = sum(n for _, n in parts)
        return FrontierResult(k, max_span, _build_records(k, rows), True, nodes)

    moves = SEARCH_MOVES_PER_RESTART
    n_restarts = max(1, budget // moves)
    restart_ids = range(n_restarts)
    if workers == 1 or n_restarts <= 1:
        parts = [_restart_chunk((k, max_span, seed, restart_ids, moves))]
    else:
        step = (n_restarts + workers - 1) // workers
        slices = [restart_ids[i : i + step] for i in range(0, n_restarts, step)]
        args = [(k, max_span, seed, s, moves) for s in slices]
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_restart_chunk, args)

    found: Dict[Tuple[int, ...], Tuple[int, int]] = {}
    for part, _ in parts:
        found.update(part)
    nodes = sum(n for _, n in parts)
    if found:
        min_b = min(b for b, _ in found.values())
        rows = [
            (els, b, ap_len)
            for els, (b, ap_len) in found.items()
            if b <= min_b + SEARCH_KEEP_MARGIN
        ]
    else:
        rows = []
    return FrontierResult(k, max_span, _build_records(k, rows), False, nodes)


# --- ratio census ----------------------------------------------------------------


def ratio_histogram(max_span: int) -> RatioHistogram:
    """Doubling ratio |2A|/|A| over every canonical set with span at most
    max_span, bucketed at width 1/10, split structured vs unstructured."""
    counts: Dict[Fraction, list] = {}
    for a in enumerate_canonical(max_span):
        st = stats(a)
        ap_len = ap_cover(a).length
        ratio = Fraction(st.doubling, st.k)
        lo = Fraction(floor(ratio * 10), 10)
        row = counts.setdefault(lo, [0, 0])
        if _is_structured(a, st, ap_len):
            row[0] += 1
        else:
            row[1] += 1
    buckets = tuple(
        RatioBucket(lo, counts[lo][0], counts[lo][1]) for lo in sorted(counts)
    )
    return RatioHistogram(max_span=max_span, buckets=buckets)
