"""Exception types shared across the package."""


class FrobforgeError(Exception):
    """Base class for all package errors."""


class AmbientMismatch(FrobforgeError):
    """Operands live in different rings."""


class ExponentOverflow(FrobforgeError):
    """An exponent left the machine-word safety range."""


class ZeroPolynomialError(FrobforgeError):
    """Operation undefined on the zero polynomial."""


class NotHomogeneous(FrobforgeError):
    """Homogeneous input required."""


class NoLift(FrobforgeError):
    """A chain-map or homotopy lifting equation has no solution."""


class GenerationError(FrobforgeError):
    """Instance generation exhausted its retry budget."""


class EquidimensionalityUnknown(FrobforgeError):
    """Operation needs an equidimensionality status of Yes or Asserted."""


class TaskFileError(FrobforgeError):
    """Task-file diagnostic with position information."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column})" if column is not None else ")")
        super().__init__(message + loc)


class BudgetExceeded(FrobforgeError):
    """A computation hit its budget: the result is Undecided, never wrong.

    `kind` names the exhausted budget (degree, pairs, time, chain, retries);
    `detail` records the limit that was hit.
    """

    def __init__(self, kind, detail=""):
        self.kind = kind
        self.detail = detail
        super().__init__(f"budget exceeded [{kind}] {detail}".rstrip())
