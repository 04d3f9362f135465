"""Exception types shared across the library.

Grouped here so that lower modules can raise errors that higher modules
catch without import cycles.  Everything derives from CuspidalError, so
callers can catch the whole family at once.
"""

from __future__ import annotations


class CuspidalError(Exception):
    """Base class for all errors raised by this library."""


class NotInSemigroup(CuspidalError):
    """The integer has no representation a*n + b*m with a, b >= 0."""


class NotUniqueRange(CuspidalError):
    """Representation requested for a value >= n*m, where it stops being unique."""


class IndexOutOfRange(CuspidalError):
    """A basis or truncation index outside the valid range."""


class ZeroForm(CuspidalError):
    """An operation needing a nonzero 1-form received the zero form."""


class ZeroPolynomial(CuspidalError):
    """An operation needing a nonzero polynomial received zero."""


class QAboveOrder(CuspidalError):
    """Weight-q part requested for q above the divisorial order."""


class NotPreBasic(CuspidalError):
    """The form has no vertex, so resonance is undefined."""


class OrderTooLow(CuspidalError):
    """Series order below the conductor; integration step not available."""


class NotACusp(CuspidalError):
    """Parametrization is not a cusp branch (bad order or leading coefficient, or n < 2)."""


class TruncationExhausted(CuspidalError):
    """An order computation ran past the working truncation; raise T and retry."""


class InternalDisagreement(CuspidalError):
    """Two independent routes to the same verdict disagreed; indicates a bug."""


class ZeroPivot(CuspidalError):
    """The linear solve for the next branch coefficient lost its pivot."""


class NotDicritical(CuspidalError):
    """Invariant-branch solving requires a totally dicritical form."""


class VerificationFailure(CuspidalError):
    """A structure-theorem check failed.  Carries the report with the first bad assertion."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class CapExceeded(CuspidalError):
    """An internal enumeration ran past its proven bound; indicates a bug, not bad input."""
