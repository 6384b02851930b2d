"""Exception types shared across the package."""


class MomentSeqError(Exception):
    """Base class for all errors raised by momentseq."""


class NonUnitConstantTerm(MomentSeqError, ZeroDivisionError):
    """A series reciprocal was requested for a series whose constant term is not invertible."""


class InsufficientTerms(MomentSeqError, ValueError):
    def __init__(self, needed, available, what="sequence"):
        self.needed = needed
        self.available = available
        super().__init__(f"{what} needs at least {needed} terms, has {available}")


class InsufficientCoefficients(MomentSeqError, ValueError):
    def __init__(self, needed, available):
        self.needed = needed
        self.available = available
        super().__init__(f"continued fraction needs {needed} coefficients, has {available}")


class Breakdown(MomentSeqError, ArithmeticError):
    """S-fraction extraction hit a vanishing leading coefficient."""

    def __init__(self, level):
        self.level = level
        super().__init__(f"S-fraction does not exist: breakdown at level {level}")


class SingularHankel(MomentSeqError, ArithmeticError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"Hankel determinant Delta_{n} vanishes; no J-fraction at this depth")


class VerificationFailure(MomentSeqError, AssertionError):
    """An internal cross-check between two independent routes disagreed."""


class BoundExceeded(MomentSeqError, ValueError):
    def __init__(self, n, bound):
        self.n = n
        self.bound = bound
        super().__init__(f"n={n} exceeds the enumeration bound {bound}")


class DomainError(MomentSeqError, ValueError):
    pass


class QuadratureFailure(MomentSeqError, ArithmeticError):
    pass


class NonPositiveTerm(MomentSeqError, ValueError):
    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(f"term {index} is not positive: {value}")
