"""Exception types shared by the package."""


class BkError(Exception):
    """Base class for all errors raised by bkseq."""


class InvalidParameter(BkError, ValueError):
    pass


class InvalidInput(BkError, ValueError):
    pass


class NotInvertible(BkError, ValueError):
    pass


class InstanceTooLarge(BkError):
    """Raised when an instance exceeds a configured size limit.

    ``required`` carries the size that would have been needed, so callers
    can raise the limit deliberately.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class InconsistencyError(BkError, AssertionError):
    """Internal invariant violated; indicates a bug rather than bad input."""
