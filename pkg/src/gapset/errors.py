"""Exception hierarchy shared by every module."""


class GapsetError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(GapsetError, ValueError):
    """Input is not sorted, has duplicates, nonpositive entries, or cannot be parsed."""


class GapsetViolation(GapsetError, ValueError):
    """A set of positive integers fails the gapset closure condition.

    ``witness`` is a pair ``(a, b)`` with ``a + b`` in the set but neither
    ``a`` nor ``b`` in it.
    """

    def __init__(self, witness, message=None):
        self.witness = witness
        a, b = witness
        super().__init__(message or f"not a gapset: {a}+{b}={a + b} is a gap but {a} and {b} are not")


class NotCofiniteError(GapsetError, ValueError):
    """Generators with gcd != 1 span a monoid with infinite complement."""


class DomainError(GapsetError, ValueError):
    """An operation's precondition does not hold for the given arguments."""


class InternalConsistencyError(GapsetError, RuntimeError):
    """A result that is guaranteed by theory failed its defensive check."""


class InvalidPFError(DomainError):
    """A proposed pseudo-Frobenius set does not come from a high-type almost symmetric semigroup."""
