"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so each class corresponds to one
failure category rather than one call site.
"""


class HahnkitError(Exception):
    """Base class for library errors."""


class ParseError(HahnkitError, ValueError):
    """Malformed text or JSON input. ``position`` is a character offset when known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainError(HahnkitError, ValueError):
    """A mathematically invalid argument (zero where nonzero is required, index out of range...)."""


class MembershipError(DomainError):
    """A coordinate or exponent does not lie in the group it is declared over."""


class SymbolicFieldError(HahnkitError):
    """Arithmetic requested on a field whose coefficients are only declared real closed."""


class ResidueObstruction(DomainError):
    """The leading coefficient has no rational p-th root."""


class ValueGroupObstruction(DomainError):
    """The leading exponent is not p-divisible in the value group."""


class TruncationBudgetExceeded(HahnkitError):
    """An expansion did not reach its truncation bound within the term budget."""


class NotApplicable(DomainError):
    """A construction's hypotheses fail for the given input."""
