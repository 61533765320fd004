"""Exception types shared across the toolkit."""


class EngelkitError(Exception):
    """Base class for all toolkit errors."""


class InputError(EngelkitError):
    """Malformed user input (JSON files, CLI arguments, bad shapes)."""


class NonPrimeModulus(EngelkitError):
    pass


class ReducibleModulusPolynomial(EngelkitError):
    pass


class DivisionByZero(EngelkitError, ZeroDivisionError):
    pass


class InfiniteField(EngelkitError):
    """An enumeration or sweep was requested over the rationals."""


class BudgetExceeded(EngelkitError):
    """A sweep or enumeration would exceed the configured budget."""


class AmbientMismatch(EngelkitError):
    """Subspace operands live in different ambient spaces or fields."""


class FieldMismatch(EngelkitError):
    pass


class AlgebraMismatch(EngelkitError):
    """An element does not belong to the algebra it was used with."""


class AntisymmetryViolation(EngelkitError):
    pass


class JacobiViolation(EngelkitError):
    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        super().__init__(f"Jacobi identity fails on basis triple {triple}: residual {residual}")


class NotAnIdeal(EngelkitError):
    pass


class NotASubalgebra(EngelkitError):
    pass


class InadmissibleM(EngelkitError):
    pass


class GammaConstraintViolation(EngelkitError):
    pass


class IndexOutOfRange(EngelkitError, IndexError):
    pass


class CrossCheckMismatch(EngelkitError):
    """Two independent computations of the same object disagreed."""
