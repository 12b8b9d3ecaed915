"""Exception hierarchy shared across the package."""


class SkewGqcError(Exception):
    """Base class for all package errors."""


class SpecMismatchError(SkewGqcError):
    """Operands live over different fields, rings or automorphisms."""


class FieldSizeError(SkewGqcError):
    """A field is too large for table-driven enumeration."""


class NonUnitError(SkewGqcError, ZeroDivisionError):
    """Inversion of a zero divisor in S, or of zero in F_q."""


class DivisionError(SkewGqcError, ZeroDivisionError):
    """Division by zero or by a polynomial whose leading coefficient is not a unit."""


class GcrdUndefinedError(SkewGqcError):
    """A non-unit leading coefficient appeared along a Euclidean chain over S."""


class ParseError(SkewGqcError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ConstructionError(SkewGqcError):
    """A code could not be built from the given generators."""


class DivisorError(ConstructionError):
    """A generator polynomial is not a right divisor of x^n - 1."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class HypothesisError(SkewGqcError):
    """The hypotheses of a counting or idempotent statement are not met."""


class BudgetExceededError(SkewGqcError):
    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class UndefinedDistanceError(SkewGqcError):
    """Minimum distance of the zero code."""


class NotCrtFormError(SkewGqcError):
    """The code is not a direct product of its two CRT components."""
