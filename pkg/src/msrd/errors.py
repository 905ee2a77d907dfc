"""Exception hierarchy shared by every module of the package."""


class MSRDError(Exception):
    """Base class for all errors raised by ``msrd``."""


class ParameterError(MSRDError, ValueError):
    """Invalid user-supplied parameters (CLI exit code 2)."""


class NotPrime(ParameterError):
    pass


class OutOfRange(ParameterError):
    pass


class InvalidDistance(OutOfRange):
    pass


class IneligibleParameters(ParameterError):
    """The requested shape/distance lies outside the proven construction envelope."""


class CapacityExceeded(ParameterError):
    pass


class ContextMismatch(MSRDError, ValueError):
    """Operands live in different fields or shapes."""


class DivisionByZero(MSRDError, ZeroDivisionError):
    pass


class BudgetExceeded(MSRDError):
    """An enumeration would visit more codewords than the caller allows."""


class InvariantBreach(MSRDError):
    """A mathematical guarantee was violated, e.g. a code beating the Singleton bound."""


class CodeFileError(ParameterError):
    """Malformed or inconsistent code file."""
