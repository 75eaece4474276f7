"""Exception types shared across the toolkit."""

from __future__ import annotations


class TransversalLabError(Exception):
    """Base class for all toolkit errors."""


class BudgetExceeded(TransversalLabError):
    """A search hit its node or wall-clock budget before exhausting its space.

    Carries whatever partial information the caller can still use.
    """

    def __init__(self, message: str = "search budget exceeded", **partial):
        super().__init__(message)
        self.partial = partial


class CapExceeded(TransversalLabError):
    """A generator would exceed its vertex or size cap."""


class MalformedInput(TransversalLabError):
    """Unparseable graph6/digraph6 text or invalid structured input."""


class NotACounterexample(TransversalLabError):
    """A digraph offered as a counterexample contains a forbidden structure.

    ``kind`` is "transitive" or "independent"; ``witness`` is the offending
    vertex tuple (ordered for transitive sets, sorted for independent sets).
    """

    def __init__(self, kind: str, witness: tuple):
        super().__init__(f"digraph contains a {kind} witness {witness}")
        self.kind = kind
        self.witness = witness


class CacheCorrupt(TransversalLabError):
    """A cached certificate failed re-verification on load."""


class VerificationError(TransversalLabError):
    """A result failed its re-verification predicate before emission."""
