"""Exception hierarchy shared by the ring, graph and polynomial layers."""

from __future__ import annotations


class RingError(ValueError):
    """Base class for every error raised by zdiam."""


class InvalidOrderError(RingError):
    pass


class ArityError(RingError):
    pass


class ModulusError(RingError):
    pass


class BaseRingError(RingError):
    """Raised when a constructor needs a prime characteristic and gets a composite."""


class ValidationError(RingError):
    """A ring axiom failed; ``axiom`` names it and ``witness`` is the offending tuple."""

    def __init__(self, axiom: str, witness: tuple = ()):
        self.axiom = axiom
        self.witness = tuple(witness)
        detail = f" (witness {self.witness})" if witness else ""
        super().__init__(f"ring axiom violated: {axiom}{detail}")


class ElementIndexError(RingError, IndexError):
    pass


class ConsistencyError(RingError):
    pass


class BudgetError(RingError):
    """A combinatorial search ran out of budget; ``coverage`` records how far it got."""

    def __init__(self, message: str, coverage: dict | None = None):
        self.coverage = dict(coverage or {})
        super().__init__(message)


class EmptyGraphError(RingError):
    pass


class VertexError(RingError):
    pass


class NotApplicableError(RingError):
    pass


class DegenerateInputError(RingError):
    pass


class RingMismatchError(RingError):
    pass


class NotAVertexError(VertexError):
    pass


class SpecError(RingError):
    """A ring spec (JSON or shorthand) could not be parsed."""
