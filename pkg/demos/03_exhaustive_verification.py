"""
Exhaustive verification over all small sets
===========================================

Every claim the library implements is checkable by brute force on small
sets: enumerate one canonical representative per affine class (translate
min to 0, divide out the gcd, pick the lexicographically smaller of the
set and its reflection), evaluate the claim's hypothesis and conclusion
on each, and count. A violation — a set in a theorem's hypothesis range
whose conclusion fails — would be a disproof; sweeps find none.
"""

from sumstruct.intset import parse_set
from sumstruct.verify import CLAIM_IDS, build_report, enumerate_canonical, sweep

# Canonical enumeration grows roughly 2x per unit of span.
for span in (4, 8, 12):
    count = sum(1 for _ in enumerate_canonical(span))
    print(f"canonical sets with span <= {span:2d}: {count}")

# The three claims: 'freiman_small_b' (|2A| < 3k-3 forces an AP cover of
# length <= k + b2), '3k3' (|2A| = 3k-3 forces a short AP or a BP), and
# 'main' (b >= 0 and 3b < k-6 force an AP of length <= 2k-1+2b or a BP of
# total length <= k+b).
print("\nclaims:", CLAIM_IDS)
summaries = sweep(max_span=12, claims=set(CLAIM_IDS), workers=1)
for claim in CLAIM_IDS:
    s = summaries[claim]
    print(f"  {claim:16s} applicable={s.applicable:4d} holds={s.holds:4d} "
          f"violations={len(s.violations)}")

# Per-set reports bundle the statistics, both covers, and one verdict per
# claim; 'route' records which conclusion satisfied the claim.
a_report = build_report(parse_set("0-3,12-14"))
print("\nreport for 0-3,12-14:")
for claim, verdict in a_report.verdicts.items():
    print(f"  {claim:16s} {verdict.to_dict()}")

# The doubling-ratio histogram classifies every canonical set by
# |2A| / k in tenth-wide buckets, split into structured (within its
# AP/BP budget) and unstructured. At small spans everything is structured.
from sumstruct.search import ratio_histogram

hist = ratio_histogram(8)
print("\n|2A|/k histogram at span <= 8:")
for bucket in hist.buckets:
    print(f"  [{float(bucket.lo):.1f}, {float(bucket.lo) + 0.1:.1f}) "
          f"structured={bucket.structured:3d} unstructured={bucket.unstructured}")
