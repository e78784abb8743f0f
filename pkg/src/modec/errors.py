"""Exception hierarchy shared by every modec module."""


class ModecError(Exception):
    """Base class for all modec errors."""


class NegativeElement(ModecError):
    pass


class ZeroElement(ModecError):
    pass


class DivisionByZero(ModecError, ZeroDivisionError):
    pass


class NotDivisible(ModecError):
    pass


class NotInRing(ModecError):
    """A fraction with negative content was offered as an element of R."""


class BothZero(ModecError):
    pass


class IdentityViolation(ModecError):
    """An emitted Tuganbaev/Bezout witness failed its exact identity check."""


class InstanceMismatch(ModecError):
    pass


class UnknownFactorization(ModecError):
    pass


class DimensionUnsupported(ModecError):
    pass


class UnsupportedShape(ModecError):
    pass


class PreconditionViolation(ModecError):
    pass


class ParseError(ModecError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.bare_message = message
