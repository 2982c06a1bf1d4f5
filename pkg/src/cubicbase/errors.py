from __future__ import annotations


class CapExceeded(RuntimeError):
    """A search or enumeration would exceed its configured size limit."""


class HypothesisError(ValueError):
    """An input violates the hypotheses an operation relies on."""


class DegenerateMerge(ValueError):
    """Contracting the invariant matching produced parallel edges."""
