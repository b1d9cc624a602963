"""
AP covers, BP covers, and two-lines embeddings
==============================================

Small doubling forces structure. The two structures this library
recognizes are the arithmetic progression (AP) cover — the shortest AP
containing A — and the bi-arithmetic progression (BP) cover: two APs
I and J with one shared difference whose sumsets I+I, I+J, J+J are
pairwise disjoint. A BP-covered set is, up to sum-structure isomorphism,
a subset of two parallel lines in the plane.
"""

from sumstruct.intset import parse_set, render
from sumstruct.progressions import ap_cover, bp_cover, bp_cover_within
from sumstruct.sumset import stats

# A set whose sumset is small but which no short AP can hold: the minimal
# AP cover is forced to stretch across the gap.
a = parse_set("0-12,45,57")
st = stats(a)
print("A  =", render(a))
print("k  =", st.k, " |2A| =", st.doubling, " b =", st.deficiency_b)

ap = ap_cover(a)
print("\nshortest AP cover:", ap.to_dict())
print("AP budget 2k-1+2b =", 2 * st.k - 1 + 2 * st.deficiency_b,
      "-> AP route fails" if ap.length > 2 * st.k - 1 + 2 * st.deficiency_b
      else "-> AP route works")

# The BP route rescues it: two windows with a shared difference.
bp = bp_cover(a)
print("\nminimal BP cover :", bp.to_dict())
print("BP budget k+b    =", st.k + st.deficiency_b,
      "-> within budget" if bp.total_length <= st.k + st.deficiency_b
      else "-> over budget")

# bp_cover_within prunes the search at a stated budget and returns the
# first cover meeting it (or None) — the form the theorem checkers use.
print("within k+b?      :", bp_cover_within(a, st.k + st.deficiency_b).to_dict())

# A BP-covered set embeds into the canonical "two lines" planar set
# {(i,0)} | {(j,1)} by an explicit sum-structure isomorphism: a bijection
# phi with x + y = z + w  <=>  phi(x) + phi(y) = phi(z) + phi(w).
# Isomorphic sets have sumsets of identical size.
from sumstruct.isomorphism import (
    embed_bp_as_two_lines,
    is_f2_isomorphism,
    planar_sumset_stats,
    render_planar,
)

planar, phi = embed_bp_as_two_lines(bp, a)
print("\ntwo-lines image  :", render_planar(planar))
print("phi              :", dict(zip(a.elements, phi)))
print("is isomorphism?  :", is_f2_isomorphism(a, planar, phi))
print("|2A| preserved?  :",
      planar_sumset_stats(planar).doubling == st.doubling)

# Not every small-doubling set has a BP cover; an AP-coverable set with
# three spread blocks often has none, and bp_cover then returns None.
c = parse_set("0,1,2,20-22,40-42")
print("\nB =", render(c), "-> bp_cover:", bp_cover(c))
