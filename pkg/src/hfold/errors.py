"""Exception hierarchy shared by every module.

Usage-type errors map to CLI exit code 2, arithmetic guards to exit code 3.
"""


class SumsetError(Exception):
    """Base class for all errors raised by :mod:`hfold`."""

    exit_code = 2


class ParseError(SumsetError, ValueError):
    pass


class EmptyInput(SumsetError, ValueError):
    pass


class DuplicateElement(SumsetError, ValueError):
    def __init__(self, value):
        super().__init__(f"duplicate element {value}")
        self.value = value


class TooSmall(SumsetError, ValueError):
    pass


class NotNormalForm(SumsetError, ValueError):
    pass


class InvalidH(SumsetError, ValueError):
    pass


class InvalidParams(SumsetError, ValueError):
    pass


class BadParameters(SumsetError, ValueError):
    pass


class UnsupportedH(SumsetError, ValueError):
    pass


class UnsupportedFamily(SumsetError, ValueError):
    pass


class ArithmeticGuard(SumsetError):
    """A computation was refused because it would overflow or exhaust memory."""

    exit_code = 3


class Overflow(ArithmeticGuard, OverflowError):
    pass


class TooLarge(ArithmeticGuard):
    pass
