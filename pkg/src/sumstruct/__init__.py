"""sumstruct: sumsets, progression covers, Freiman isomorphisms, and
exhaustive structure verification for finite sets of integers.

The library computes the doubling |2A| and the deficiency b = |2A| - (3k-3),
finds minimal arithmetic-progression and bi-arithmetic-progression covers,
tests F2-isomorphisms (including the two-lines planar embedding of BP-covered
sets), verifies the classical structure theorems exhaustively on all small
sets up to affine equivalence, and searches for extremal sets that escape the
structural budgets.
"""

from .errors import InapplicableError, ParseError, ResourceCeilingError
from .intset import IntSet, NormalForm, affine_equivalent, normalize, parse_set, render

__version__ = "0.1.0"

__all__ = [
    "IntSet",
    "NormalForm",
    "parse_set",
    "render",
    "normalize",
    "affine_equivalent",
    "ParseError",
    "InapplicableError",
    "ResourceCeilingError",
    "__version__",
]
