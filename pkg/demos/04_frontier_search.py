"""
Searching the structure frontier
================================

For fixed k, how small can the deficiency b be for a set that escapes
BOTH structures — needs an AP longer than 2k-1+2b and has no BP of total
length at most k+b? That minimal b is the frontier. The conjecture range
3b < k - 6 asserts no escape is possible; frontier_search looks for
counterexamples, exhaustively when the space fits the node budget and by
seeded local search beyond that.
"""

from sumstruct.intset import render
from sumstruct.search import frontier_search

# Small spaces are certified exhaustively: every canonical set with the
# given k and span is evaluated. For k = 6 the frontier sits at b = 0 —
# outside the conjecture range, since 3*0 < 6 - 6 fails.
result = frontier_search(k=6, max_span=16)
print(f"k=6, span<=16: exhaustive={result.exhaustive}, "
      f"nodes={result.nodes}, records={len(result.records)}")
front = [r for r in result.records if r.frontier]
print(f"frontier b = {front[0].b}; first frontier set: {render(front[0].set)}")
print(f"any record in the conjecture range? "
      f"{any(r.applicable for r in result.records)}")

# Larger spans switch to randomized restarts with local moves (element
# shifts, swaps, block translations). Identical seed + budget give
# identical results at any worker count.
result = frontier_search(k=9, max_span=60, budget=24_000, seed=5, workers=1)
print(f"\nk=9, span<=60: exhaustive={result.exhaustive}, nodes={result.nodes}")
best = min(r.b for r in result.records)
print(f"minimal b found: {best}")
for r in result.records[:4]:
    print(f"  b={r.b} ap={r.ap_len} bp={r.bp_len} ratio={r.ratio} {render(r.set)}")

# Among the b = 1 records sits the three-equal-blocks pattern
# {0,1,2} | {c,c+1,c+2} | {2c,2c+1,2c+2} — the extremal ex12 shape.
# Records are certified: deficiency and both covers are re-derived from
# the stored elements before a record is returned.
blocks = [r for r in result.records
          if len(r.set) == 9 and render(r.set).count(",") == 2
          and r.set.elements[3] * 2 == r.set.elements[6]]
for r in blocks[:2]:
    print(f"  three-block record: {render(r.set)}")
