"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a stated invariant.

    ``invariant`` names the violated condition and ``residual`` carries the
    offending numerical value, so callers can report both.
    """

    def __init__(self, invariant, residual=None, message=None):
        self.invariant = invariant
        self.residual = residual
        if message is None:
            message = f"violated invariant '{invariant}'"
            if residual is not None:
                message += f" (residual {residual:.3e})"
        super().__init__(message)


class NotPSDError(ValidationError):
    """Matrix has an eigenvalue below the PSD tolerance."""

    def __init__(self, eigenvalue):
        super().__init__(
            "positive_semidefinite",
            eigenvalue,
            f"matrix is not PSD: eigenvalue {eigenvalue:.3e} < -1e-10",
        )


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class ConvergenceError(ArithmeticError):
    """Eigendecomposition failed to reach the residual target."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"eigendecomposition did not converge: residual {residual:.3e}")


class ConsistencyError(ArithmeticError):
    """An analytically nonnegative quantity came out clearly negative.

    Raised instead of silently clamping, since a value this far below zero
    points at a bug rather than round-off.
    """

    def __init__(self, quantity, value):
        self.quantity = quantity
        self.value = value
        super().__init__(f"{quantity} = {value:.3e} is negative beyond round-off")
