"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ValidityError(DomainError):
    """A bound was requested at a point violating its hypotheses.

    The message names the hypothesis that failed.
    """


class ConvergenceError(RuntimeError):
    """An iteration or subdivision cap was exceeded before reaching tolerance.

    Raised instead of returning a silent partial result.
    """
