"""Exception types shared by every numeric module in the package."""


class PunctMetricError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PunctMetricError, ValueError):
    """An argument lies outside the mathematical domain of the function."""


class RangeError(PunctMetricError, ValueError):
    """An argument is inside the domain but outside the range this
    implementation can evaluate without silent accuracy loss."""


class ConvergenceError(PunctMetricError, ArithmeticError):
    """An iteration or series failed to converge within its budget."""


class BracketError(PunctMetricError, ArithmeticError):
    """A root bracket does not contain a sign change."""


class UnknownCheckError(PunctMetricError, KeyError):
    """A verification check name is not in the registry."""


class HypothesisError(PunctMetricError, ValueError):
    """Parameters do not satisfy the hypothesis of the named claim."""
