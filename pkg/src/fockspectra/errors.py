"""Exception types shared across the package."""


class SingularMatrixError(ArithmeticError):
    """An exact elimination hit a matrix without full rank."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, never bad user input."""
