"""Claim checkers, canonical enumeration, and exhaustive sweeps.

Three coverage claims about a finite integer set A with k elements,
doubling |2A| = |A+A|, and deficiencies b2 = |2A|-(2k-1), b3 = |2A|-(3k-3):

``freiman_small_b``
    Small doubling forces an AP: if k > 3 and |2A| < 3k-3 then A lies in
    an arithmetic progression of length at most k + b2.
``3k3``
    At the tight boundary |2A| = 3k-3 with k > 6, A lies in an AP of
    length at most 2k-1 or in a valid bi-progression.
``main``
    In the conjectured range 0 <= b3 < k/3 - 2, A lies in an AP of length
    at most 2k-1+2*b3 or in a bi-progression of total length at most k+b3.

``sweep`` runs the checkers over every affine-equivalence class of sets up
to a given span, exactly once per class, and reports violation certificates.
The enumeration order is deterministic (span ascending, then interior
bitmask ascending), and sweep results are identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterator, Optional, Tuple

from .config import SWEEP_SET_CAP
from .errors import ResourceCeilingError
from .intset import IntSet, NormalForm, normalize, render
from .progressions import ApWindow, BpCover, ap_cover, bp_cover, bp_cover_within
from .sumset import SumsetStats, stats

__all__ = [
    "CLAIM_IDS",
    "Verdict",
    "StructureReport",
    "SweepSummary",
    "check_freiman_small_b",
    "check_3k3",
    "check_main",
    "build_report",
    "enumerate_canonical",
    "example_family",
    "sweep",
]

CLAIM_IDS: Tuple[str, ...] = ("freiman_small_b", "3k3", "main")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one claim on one set.

    ``holds`` is None exactly when the claim's hypotheses are not met.
    ``witness`` carries the numbers behind the outcome: always k, |2A|,
    and the claim's deficiency ``b``; plus the covering route taken, the
    cover itself, or the violation data.
    """

    claim: str
    applicable: bool
    holds: Optional[bool]
    witness: dict

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "applicable": self.applicable,
            "holds": self.holds,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class StructureReport:
    """Full analysis of one set: normal form, sumset statistics, minimal
    covers, and a verdict per claim."""

    normal_form: NormalForm
    stats: SumsetStats
    ap: ApWindow
    bp: Optional[BpCover]
    verdicts: Dict[str, Verdict]

    def to_dict(self) -> dict:
        return {
            "normal_form": {
                "elements": list(self.normal_form.set.elements),
                "shift": self.normal_form.shift,
                "scale": self.normal_form.scale,
                "reflected": self.normal_form.reflected,
            },
            "stats": self.stats.to_dict(),
            "ap": self.ap.to_dict(),
            "bp": self.bp.to_dict() if self.bp is not None else None,
            "verdicts": {c: self.verdicts[c].to_dict() for c in CLAIM_IDS},
        }


@dataclass(frozen=True)
class SweepSummary:
    """Aggregated sweep result for a single claim."""

    max_span: int
    claim: str
    applicable: int
    holds: int
    violations: Tuple[dict, ...]

    def to_dict(self) -> dict:
        return {
            "max_span": self.max_span,
            "claim": self.claim,
            "applicable": self.applicable,
            "holds": self.holds,
            "violations": list(self.violations),
        }


# --- checkers ----------------------------------------------------------------


def check_freiman_small_b(a: IntSet) -> Verdict:
    """Small-doubling AP coverage: k > 3 and |2A| < 3k-3 imply A lies in an
    AP of length at most k + b2."""
    st = stats(a)
    b = st.deficiency_b2
    witness = {"k": st.k, "doubling": st.doubling, "b": b}
    if not (st.k > 3 and st.doubling < 3 * st.k - 3):
        witness["reason"] = "requires k > 3 and |2A| < 3k-3"
        return Verdict("freiman_small_b", False, None, witness)
    ap = ap_cover(a)
    witness["ap_len"] = ap.length
    witness["bound"] = st.k + b
    witness["ap"] = ap.to_dict()
    return Verdict("freiman_small_b", True, ap.length <= st.k + b, witness)


def check_3k3(a: IntSet) -> Verdict:
    """Tight-boundary coverage: k > 6 and |2A| = 3k-3 imply A lies in an AP
    of length at most 2k-1 or in a valid bi-progression.  When the BP route
    decides the verdict, ``exact_bp`` flags whether A *is* the BP (the cover
    has no slack: total length equals k)."""
    st = stats(a)
    witness = {"k": st.k, "doubling": st.doubling, "b": st.deficiency_b}
    if not (st.k > 6 and st.doubling == 3 * st.k - 3):
        witness["reason"] = "requires k > 6 and |2A| = 3k-3"
        return Verdict("3k3", False, None, witness)
    ap = ap_cover(a)
    witness["ap_len"] = ap.length
    witness["ap_bound"] = 2 * st.k - 1
    if ap.length <= 2 * st.k - 1:
        witness["route"] = "ap"
        witness["ap"] = ap.to_dict()
        return Verdict("3k3", True, True, witness)
    bp = bp_cover(a)
    if bp is not None:
        witness["route"] = "bp"
        witness["bp"] = bp.to_dict()
        witness["bp_len"] = bp.total_length
        witness["exact_bp"] = bp.total_length == st.k
        return Verdict("3k3", True, True, witness)
    witness["ap"] = ap.to_dict()
    witness["bp"] = None
    witness["bp_len"] = None
    return Verdict("3k3", True, False, witness)


def check_main(a: IntSet) -> Verdict:
    """Deficiency-budget coverage in the conjectured range 0 <= b < k/3 - 2:
    A lies in an AP of length at most 2k-1+2b or in a bi-progression of
    total length at most k+b.  A failure is reported with the minimal
    covers as a certificate, never raised."""
    st = stats(a)
    b = st.deficiency_b
    witness = {"k": st.k, "doubling": st.doubling, "b": b}
    if not (b >= 0 and 3 * b < st.k - 6):
        witness["reason"] = "requires 0 <= b and b < k/3 - 2"
        return Verdict("main", False, None, witness)
    ap = ap_cover(a)
    witness["ap_len"] = ap.length
    witness["ap_bound"] = 2 * st.k - 1 + 2 * b
    if ap.length <= 2 * st.k - 1 + 2 * b:
        witness["route"] = "ap"
        witness["ap"] = ap.to_dict()
        return Verdict("main", True, True, witness)
    witness["bp_budget"] = st.k + b
    bp = bp_cover_within(a, st.k + b)
    if bp is not None:
        witness["route"] = "bp"
        witness["bp"] = bp.to_dict()
        witness["bp_len"] = bp.total_length
        return Verdict("main", True, True, witness)
    witness["ap"] = ap.to_dict()
    minimal = bp_cover(a)
    witness["bp"] = minimal.to_dict() if minimal is not None else None
    witness["bp_len"] = minimal.total_length if minimal is not None else None
    return Verdict("main", True, False, witness)


_CHECKERS = {
    "freiman_small_b": check_freiman_small_b,
    "3k3": check_3k3,
    "main": check_main,
}


def build_report(a: IntSet) -> StructureReport:
    """Normal form, sumset statistics, minimal AP and BP covers, and all
    claim verdicts for one set."""
    return StructureReport(
        normal_form=normalize(a),
        stats=stats(a),
        ap=ap_cover(a),
        bp=bp_cover(a),
        verdicts={claim: _CHECKERS[claim](a) for claim in CLAIM_IDS},
    )


# --- canonical enumeration -----------------------------------------------------


def enumerate_canonical(max_span: int) -> Iterator[IntSet]:
    """One representative per affine-equivalence class of integer sets of
    size >= 2 whose normal form fits in [0, max_span].

    Representatives have min 0, gcd of elements 1, and are the
    lexicographically smaller of their two reflections.  Order: span
    ascending, then interior-element bitmask ascending (bit i set means
    element i+1 is present)."""
    if max_span < 1:
        raise ValueError(f"max_span must be >= 1, got {max_span}")
    for span in range(1, max_span + 1):
        interior = span - 1
        for mask in range(1 << interior):
            els = [0]
            bits = mask
            pos = 1
            while bits:
                if bits & 1:
                    els.append(pos)
                bits >>= 1
                pos += 1
            els.append(span)
            if gcd(*els) != 1:
                continue
            reflected = sorted(span - x for x in els)
            if reflected < els:
                continue
            yield IntSet._from_sorted_tuple(tuple(els))


# --- example families ----------------------------------------------------------


def example_family(name: str, **params) -> IntSet:
    """Materialize a member of one of the three parametric families.

    ``ex12(a, c)``: three blocks of ``a`` consecutive integers anchored at
    0, c, 2c, with c > 6a; size k = 3a, deficiency b = k/3 - 2.
    ``ex15(k)``: the interval [0, k-3] plus {k+10, 2k+20}, k > 15; b = 11,
    and the minimal AP cover is as long as the budget 2k-1+2b allows.
    ``ex16(k)``: the interval [0, k-3] plus {3k, 3k+12}, k > 14; b = 11,
    and the minimal BP cover meets the budget k+b exactly.
    """
    def _want(keys):
        if set(params) != set(keys):
            raise ValueError(
                f"{name} takes parameters {sorted(keys)}, got {sorted(params)}"
            )
        vals = [params[key] for key in keys]
        if not all(isinstance(v, int) for v in vals):
            raise ValueError(f"{name} parameters must be integers, got {params}")
        return vals

    if name == "ex12":
        a, c = _want(("a", "c"))
        if a < 1 or c <= 6 * a:
            raise ValueError(f"ex12 requires a >= 1 and c > 6a, got a={a}, c={c}")
        return IntSet([i + off for off in (0, c, 2 * c) for i in range(a)])
    if name == "ex15":
        (k,) = _want(("k",))
        if k <= 15:
            raise ValueError(f"ex15 requires k > 15, got {k}")
        return IntSet(list(range(k - 2)) + [k + 10, 2 * k + 20])
    if name == "ex16":
        (k,) = _want(("k",))
        if k <= 14:
            raise ValueError(f"ex16 requires k > 14, got {k}")
        return IntSet(list(range(k - 2)) + [3 * k, 3 * k + 12])
    raise ValueError(f"unknown family {name!r}; expected ex12, ex15, or ex16")


# --- sweep ---------------------------------------------------------------------


def _claim_status(claim: str, a: IntSet, st: SumsetStats, ap_len: int):
    """(applicable, holds-or-None) without witness assembly; the sweep fast
    path.  Must mirror the public checkers exactly (cross-tested)."""
    k, d, b3 = st.k, st.doubling, st.deficiency_b
    if claim == "freiman_small_b":
        if not (k > 3 and d < 3 * k - 3):
            return False, None
        return True, ap_len <= k + st.deficiency_b2
    if claim == "3k3":
        if not (k > 6 and d == 3 * k - 3):
            return False, None
        return True, ap_len <= 2 * k - 1 or bp_cover(a) is not None
    if not (b3 >= 0 and 3 * b3 < k - 6):
        return False, None
    if ap_len <= 2 * k - 1 + 2 * b3:
        return True, True
    return True, bp_cover_within(a, k + b3) is not None


def _violation_row(claim: str, a: IntSet, st: SumsetStats, ap_len: int) -> dict:
    """Violation certificate: the set, its invariants, and the minimal cover
    lengths.  ``b`` is the claim's own deficiency (b2 for the small-doubling
    claim, b3 otherwise); ``bp_len`` is null when no valid BP exists or the
    claim's statement has no BP route."""
    if claim == "freiman_small_b":
        b = st.deficiency_b2
        bp_len = None
    else:
        b = st.deficiency_b
        bp = bp_cover(a)
        bp_len = bp.total_length if bp is not None else None
    return {
        "set": render(a),
        "k": st.k,
        "b": b,
        "ap_len": ap_len,
        "bp_len": bp_len,
    }


def _sweep_chunk(element_tuples, claims):
    """Per-claim (applicable, holds, violations) over one contiguous slice of
    the enumeration.  Pure; merging is concatenation in slice order."""
    out = {claim: [0, 0, []] for claim in claims}
    for els in element_tuples:
        a = IntSet._from_sorted_tuple(els)
        st = stats(a)
        ap_len = ap_cover(a).length
        for claim in claims:
            applicable, holds = _claim_status(claim, a, st, ap_len)
            if not applicable:
                continue
            row = out[claim]
            row[0] += 1
            if holds:
                row[1] += 1
            else:
                row[2].append(_violation_row(claim, a, st, ap_len))
    return out


def sweep(max_span: int, claims, workers: int = 1) -> Dict[str, SweepSummary]:
    """Run the selected claims over every canonical set with span at most
    ``max_span``; one SweepSummary per claim.

    Raises ResourceCeilingError when the enumeration exceeds the configured
    set cap.  Totals and violation lists are independent of ``workers``:
    work is split into contiguous index ranges and merged in order.
    """
    claim_list = tuple(c for c in CLAIM_IDS if c in set(claims))
    if not claims or len(claim_list) != len(set(claims)):
        unknown = set(claims) - set(CLAIM_IDS)
        raise ValueError(
            f"claims must be a nonempty subset of {CLAIM_IDS}"
            + (f"; unknown: {sorted(unknown)}" if unknown else "")
        )
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    sets = []
    for s in enumerate_canonical(max_span):
        sets.append(s.elements)
        if len(sets) > SWEEP_SET_CAP:
            raise ResourceCeilingError(
                f"enumeration at max_span={max_span} exceeds the "
                f"{SWEEP_SET_CAP}-set cap"
            )

    if workers == 1 or len(sets) <= workers:
        parts = [_sweep_chunk(sets, claim_list)]
    else:
        step = (len(sets) + workers - 1) // workers
        chunks = [sets[i : i + step] for i in range(0, len(sets), step)]
        with multiprocessing.Pool(workers) as pool:
            parts = pool.starmap(
                _sweep_chunk, [(chunk, claim_list) for chunk in chunks]
            )

    summaries = {}
    for claim in claim_list:
        applicable = sum(part[claim][0] for part in parts)
        holds = sum(part[claim][1] for part in parts)
        violations = tuple(v for part in parts for v in part[claim][2])
        summaries[claim] = SweepSummary(
            max_span=max_span,
            claim=claim,
            applicable=applicable,
            holds=holds,
            violations=violations,
        )
    return summaries
