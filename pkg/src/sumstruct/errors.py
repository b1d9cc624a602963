"""Exception types shared across the library."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed set-literal or planar-literal input.

    Carries the byte offset of the offending token so callers can point at
    the exact position in the input string.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class InapplicableError(ValueError):
    """A theorem's hypotheses cannot be met for the given input.

    Raised, for example, when the Lev-Smeliansky bound is requested for a
    pair whose normalized first set has gcd greater than 1.
    """


class ResourceCeilingError(RuntimeError):
    """An enumeration exceeded the configured set-count cap."""
