"""Exception types raised by the library and mapped to CLI exit codes."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DimensionMismatch(ValueError):
    """Array arguments whose lengths do not agree with each other."""


class NonFiniteInput(ValueError):
    """NaN or infinity where a finite number is required."""


class InvalidOrder(ValueError):
    """Derivative order other than 1 or 2."""


class BadSpec(ValueError):
    """Malformed sampling request."""


class SingularSystem(ArithmeticError):
    """Tridiagonal elimination hit a vanishing pivot (corrupted input)."""


class SingularMatrix(ArithmeticError):
    """Dense elimination hit a vanishing pivot."""


class ConfigError(ValueError):
    """Inconsistent run configuration (CLI exit code 1)."""


class ParseError(ValueError):
    """Malformed input file (CLI exit code 2)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
