"""
Sumsets, doubling, and the deficiency b
=======================================

For a finite set A of integers with k = |A| elements, the sumset
2A = {a + a' : a, a' in A} has size between 2k - 1 (achieved exactly by
arithmetic progressions) and k(k+1)/2 (achieved by Sidon sets). The
quantity this library is organized around is the deficiency

    b = |2A| - (3k - 3),

which measures how far |2A| sits below the structural threshold 3k - 3.
"""

# Parse a set from the compact run-length literal used everywhere in the
# CLI and reports: "0-4,10" means {0,1,2,3,4,10}.
from sumstruct.intset import IntSet, parse_set, render
from sumstruct.sumset import doubling_size, lev_smeliansky_bound, stats, sumset

a = parse_set("0-4,10")
print("A       =", render(a), "         k =", len(a))
print("2A      =", render(sumset(a, a)), "   |2A| =", doubling_size(a))

# stats() packages k, |2A|, the deficiency b = |2A| - (3k-3), and the span.
st = stats(a)
print("stats   =", st.to_dict())

# An arithmetic progression has the minimum possible sumset: |2A| = 2k - 1,
# so its deficiency is b = 2k - 1 - (3k - 3) = -(k - 2), the most negative
# value attainable.
interval = IntSet(range(10))
print("\ninterval [0,9]:", stats(interval).to_dict())

# A Sidon set (all pairwise sums distinct) sits at the opposite extreme.
sidon = IntSet([0, 1, 3, 7, 12, 20])
print("sidon set     :", stats(sidon).to_dict())

# The two-variable bound |A+B| >= min{m + |B|, |A| + 2|B| - 3} (m = max of
# the wider set after translating both to start at 0) is exact for many
# shapes; here it is tight for an interval against a sparse set.
b = IntSet([0, 3, 7])
print("\n|A+B| =", len(sumset(interval, b)),
      " bound =", lev_smeliansky_bound(interval, b))

# Three parametric families pin the theory's edge cases. ex12(a, c) glues
# three blocks of length a at 0, c, 2c and has b = a - 2 whenever c > 6a;
# ex15 and ex16 are interval-plus-two-points constructions with b = 11.
from sumstruct.verify import example_family

ex = example_family("ex12", a=3, c=20)
print("\nex12(3,20)    =", render(ex))
print("stats         =", stats(ex).to_dict(), " (b = a - 2 = 1)")

ex = example_family("ex15", k=20)
print("ex15(20)      =", render(ex))
print("stats         =", stats(ex).to_dict(), " (b = 11 for every k > 15)")
