"""Exception types shared across the package."""

from __future__ import annotations


class OneIdealError(Exception):
    """Base class for all package-specific errors."""


class FamilyValidationError(OneIdealError):
    """A graph family description violates one of the one-ideal hypotheses.

    ``code`` is one of ``ConditionK``, ``NoIdealEdge``, ``InfiniteSum``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


class RegimeError(OneIdealError):
    """Operation not defined for this loop count / tail regime."""


class ConeShapeError(OneIdealError):
    """Element, cone, and group descriptors do not fit together."""


class UnsupportedConeCombination(OneIdealError):
    """Cone shapes outside the supported case analysis; never silently false."""


class NotDeterminedError(OneIdealError):
    """The middle cone is not determined by ideal and quotient (AF-AF case)."""


class OutOfScopeComparison(OneIdealError):
    """Isomorphism comparison requested outside the finite-loop regime.

    Carries the computed invariants of both inputs so callers can still
    report them.
    """

    def __init__(self, message: str, invariants=None):
        super().__init__(message)
        self.invariants = invariants


class InternalConsistencyError(OneIdealError):
    """Two independent computation routes disagreed; signals a bug."""
