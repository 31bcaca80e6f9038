# algebra/errors.py


class MhcError(Exception):
    """Base class for every error raised by the engine."""


class ParseError(MhcError, ValueError):
    """A group, character, lambda or function descriptor could not be parsed."""


class CapacityError(MhcError):
    """A computation would exceed a configured size cap."""


class GroupMismatchError(MhcError, ValueError):
    pass


class OrderMismatchError(MhcError, ValueError):
    """Cyclotomic scalars of different orders were combined without embedding."""


class DegreeError(MhcError, IndexError):
    pass


class CyclicityError(MhcError):
    """The coboundary failed to map cyclic cochains to cyclic cochains."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class WindowError(ParseError):
    """A Z-line window is too small for the requested computation."""
