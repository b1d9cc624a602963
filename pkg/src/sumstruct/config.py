"""Tuned constants.

These are engineering knobs, not mathematical parameters: changing them must
never change any result, only how fast it is produced (except for the
resource ceiling, which bounds how much work a sweep may attempt, and the
default margin theta, which callers can always override explicitly).
"""

from __future__ import annotations

# sumset engine selection ----------------------------------------------------

# Use the sorted pairwise merge when |a|*|b| is at most this; above it the
# dense engines win.
SPARSE_PAIR_LIMIT = 1 << 14

# Dense engine: below this output span use the bit-vector shift-OR; above it
# switch to FFT convolution of indicator vectors.
DENSE_BITSET_SPAN_LIMIT = 1 << 15

# Output spans beyond this are too large to materialize densely; fall back to
# the sparse merge regardless of pair count.
DENSE_SPAN_LIMIT = 1 << 27

# enumeration / sweeps -------------------------------------------------------

# Hard cap on the number of canonical sets a single sweep may enumerate.
SWEEP_SET_CAP = 2_000_000

# search ----------------------------------------------------------------------

# Default node budget for frontier_search.
SEARCH_DEFAULT_BUDGET = 200_000

# Local moves attempted per randomized restart.
SEARCH_MOVES_PER_RESTART = 400

# Randomized frontier search keeps records with deficiency within this
# margin of the best found, so results stay focused on the frontier.
SEARCH_KEEP_MARGIN = 2

# structure -------------------------------------------------------------------

# Default margin for triangle profiles and fullness queries.
DEFAULT_THETA = "0.05"
