"""Exception hierarchy shared by the library and the command line."""


class FuscatError(Exception):
    """Base class for every error raised by fuscat."""


class StructuralError(FuscatError, ValueError):
    """Malformed data: index out of range, wrong shape, unknown label.

    Distinct from an axiom violation, which is reported rather than raised.
    """


class RingMismatchError(FuscatError, ValueError):
    """Two objects that must live over the same fusion ring do not."""


class InvalidCategoryError(FuscatError, ValueError):
    """Data that parsed fine but fails the fusion/ribbon/embedding axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NumericalError(FuscatError, ArithmeticError):
    """An iterative routine did not converge."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BraidingError(FuscatError, ValueError):
    """Ribbon data cannot carry a braiding (e.g. non-commutative fusion)."""


class AnomalyError(FuscatError):
    """The coefficient category is not a UMTC over the base.

    ``classification`` holds the flags that caused the rejection.
    """

    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification


class UnsupportedConfigurationError(FuscatError):
    """A surface or datum the engine has no closed form for."""


class ParseError(FuscatError):
    """Syntax error in an input file, with 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SemanticError(FuscatError, ValueError):
    """Well-formed input with an invalid value; ``path`` names the field."""

    def __init__(self, message, path=None):
        if path:
            message = f"{message} at {path}"
        super().__init__(message)
        self.path = path
