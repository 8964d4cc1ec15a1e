"""Domain errors and the exit codes the CLI maps them to."""

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_NOT_IN_SEMIGROUP = 4


class CongruenceError(Exception):
    """Base class for every error raised by the library."""


class DegreeMismatchError(CongruenceError, ValueError):
    pass


class NotIdempotentError(CongruenceError, ValueError):
    pass


class NotationError(CongruenceError, ValueError):
    """Malformed element text or input file."""


class NotInSemigroupError(CongruenceError, LookupError):
    def __init__(self, element, message: str = None):
        self.element = element
        super().__init__(message or f"{element} is not an element of the semigroup")


class GroupError(CongruenceError, ValueError):
    pass


class UnsupportedJoinError(CongruenceError):
    pass


class SemigroupMismatchError(CongruenceError, ValueError):
    pass


class EnumerationLimitError(CongruenceError):
    pass


class InvalidNodeError(CongruenceError, IndexError):
    pass
