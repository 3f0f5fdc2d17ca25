"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`GrothError`,
so the CLI can map them to a single exit code and print the class name.
"""


class GrothError(Exception):
    """Base class for all library errors."""


class DivisionByZero(GrothError, ZeroDivisionError):
    pass


class ConstraintUnsatisfiable(GrothError):
    pass


class UnboundVariable(GrothError, KeyError):
    pass


class BoxOverflow(GrothError, ValueError):
    pass


class ProfileViolation(GrothError, ValueError):
    pass


class SingularMap(GrothError, ValueError):
    pass


class AlphabetTooShort(GrothError, ValueError):
    pass


class CoincidentVariables(GrothError, ValueError):
    pass


class BudgetExceeded(GrothError):
    pass


class InexactDivision(GrothError, ArithmeticError):
    """Polynomial division left a remainder. Signals a bug, never expected."""


class ZeroQ(GrothError, ValueError):
    pass
