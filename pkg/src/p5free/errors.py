from __future__ import annotations

from .graph import CapabilityError, GraphError

__all__ = ["CapabilityError", "GraphError", "PreconditionError", "TheoremViolation"]


class PreconditionError(ValueError):
    """A routine was called outside the graph class it is defined on.

    ``clauses`` lists every failed condition, not just the first.
    """

    def __init__(self, clauses: list[str]) -> None:
        self.clauses = list(clauses)
        super().__init__("precondition failed: " + "; ".join(self.clauses))


class TheoremViolation(RuntimeError):
    """A proved statement failed on a concrete graph; carries the evidence."""

    def __init__(self, message: str, evidence: dict | None = None) -> None:
        self.evidence = evidence or {}
        super().__init__(message)
