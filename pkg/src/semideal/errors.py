"""Error types shared across the library.

Every error carries a stable ``name`` used by the CLI when mapping failures
to exit codes and messages.
"""


class SemidealError(Exception):
    name = "InternalError"

    def __init__(self, message=""):
        super().__init__(message or self.name)


class InstanceMismatch(SemidealError):
    name = "InstanceMismatch"


class OutOfSupport(SemidealError):
    name = "OutOfSupport"


class ZeroDivisorIdeal(SemidealError):
    name = "ZeroDivisorIdeal"


class EmptyIdeal(SemidealError):
    name = "EmptyIdeal"


class NotAMember(SemidealError):
    name = "NotAMember"


class NotMaximal(SemidealError):
    name = "NotMaximal"


class NotPrime(SemidealError):
    name = "NotPrime"


class UnknownLaw(SemidealError):
    name = "UnknownLaw"


class UnknownPrime(SemidealError):
    name = "UnknownPrime"


class NotFractional(SemidealError):
    name = "NotFractional"


class Unsupported(SemidealError):
    name = "Unsupported"


class ParseError(SemidealError):
    """Syntax error with a 1-based column and the token set that was legal."""

    name = "ParseError"

    def __init__(self, message, column, expected=()):
        super().__init__(message)
        self.column = column
        self.expected = tuple(expected)


class DMCapExceeded(SemidealError):
    name = "DMCapExceeded"


class InternalError(SemidealError):
    name = "InternalError"
