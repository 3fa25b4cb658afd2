"""Exception hierarchy shared by every module."""


class ColoredCircleError(ValueError):
    """Base class for all library errors."""


class FormatError(ColoredCircleError):
    """A text document does not follow the expected line grammar."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class StructureError(ColoredCircleError):
    """The edges of a document do not form a tree."""


class LabelError(ColoredCircleError):
    """Edge labels are not in bijection with the color set."""


class UnknownColorError(ColoredCircleError):
    """A color token that is not part of the color set."""


class CapExceededError(ColoredCircleError):
    """An enumeration was requested beyond the configured size cap."""


class InvalidStructureError(ColoredCircleError):
    """A {0,1} table is not a valid (extended) oriented bisection structure.

    ``witness`` holds the offending indices as color tokens, e.g. a triple
    ``(a, b, c)`` for a broken betweenness condition.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class SymbolError(ColoredCircleError):
    """An integer table cannot be realized as a symbol over a connected ring."""
