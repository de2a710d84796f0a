"""Exception hierarchy shared by the library and the command line."""


class ArtinlefError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class ParseError(ArtinlefError, ValueError):
    """Malformed polynomial, linear form or sequence text."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainMismatchError(ArtinlefError, ValueError):
    """Operands live over different fields or in different numbers of variables."""


class ShapeError(ArtinlefError, ValueError):
    """Matrix shape does not fit the requested operation."""


class PreconditionError(ArtinlefError, ValueError):
    """A mathematical hypothesis of the requested operation is not met."""

    exit_code = 3


class UnsupportedCharacteristicError(PreconditionError):
    """Divided-power evaluation needs factorials that are invertible in the field."""


class InternalConsistencyError(ArtinlefError, AssertionError):
    """An invariant that holds by theory was violated; always a bug."""

    exit_code = 4
