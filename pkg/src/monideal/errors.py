"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Exponent vectors of mismatched length were combined."""


class AmbientMismatchError(ValueError):
    """Two ideals live in different ambient rings."""


class DomainError(ValueError):
    """Operation applied to an ideal outside its domain (zero/unit)."""


class BudgetError(RuntimeError):
    """A configured enumeration or recursion budget was exceeded."""


class ParseError(ValueError):
    """Malformed ideal or monomial input, with source position."""

    def __init__(self, message, line, col):
        super().__init__("%s (line %d, column %d)" % (message, line, col))
        self.line = line
        self.col = col
