"""Exception hierarchy.

Every error raised by the library derives from :class:`ChromLLTError`, so the
CLI can map each class to its own exit status.
"""


class ChromLLTError(Exception):
    exit_code = 9


class NonzeroRemainder(ChromLLTError, ArithmeticError):
    """Polynomial division was expected to be exact but left a remainder."""

    exit_code = 7


class NonIntegral(ChromLLTError, ArithmeticError):
    """A coefficient that must be an integer turned out to be a proper fraction."""

    exit_code = 7


class ShapeMismatch(ChromLLTError, ValueError):
    exit_code = 8


class SizeMismatch(ChromLLTError, ValueError):
    exit_code = 8


class LengthMismatch(ChromLLTError, ValueError):
    exit_code = 8


class InvalidMSeq(ChromLLTError, ValueError):
    exit_code = 4

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InvalidArea(ChromLLTError, ValueError):
    exit_code = 4

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotUnitInterval(ChromLLTError, ValueError):
    exit_code = 4


class RangeError(ChromLLTError, ValueError):
    """A family constructor or closed form was called outside its parameter range."""

    exit_code = 5


class BruteForceBound(ChromLLTError, ValueError):
    exit_code = 6


class NotATriangle(ChromLLTError, ValueError):
    exit_code = 8


class ParseError(ChromLLTError, ValueError):
    exit_code = 3

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
