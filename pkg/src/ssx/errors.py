"""Exception hierarchy shared by every approximant family."""


class SSXError(Exception):
    """Base class for all library errors."""


class ZeroLeadingCoefficient(SSXError):
    pass


class NonUnitConstant(SSXError):
    """Series operation needs a unit constant term."""


class ComplexBranch(SSXError):
    """An approximant parameter or base came out complex.

    This is a legitimate outcome of the construction (the approximant does not
    exist as a real function), not a programming error.
    """


class NegativeTower(ComplexBranch):
    """A level of a nested root tower is not positive.

    Attributes:
        level: 1-based index of the failing tower level.
    """

    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class NegativeBase(ComplexBranch):
    pass


class DegenerateMoments(SSXError):
    pass


class NoRealSolution(SSXError):
    pass


class DomainError(SSXError):
    """Evaluation at or beyond a singular point of the approximant."""

    def __init__(self, message, x=None, level=None):
        super().__init__(message)
        self.x = x
        self.level = level


class ZeroGamma(SSXError):
    pass


class NoFiniteLimit(SSXError):
    pass


class VelocityZeroCrossing(SSXError):
    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class InversionDomain(SSXError):
    pass


class QuadratureFailure(SSXError):
    pass


class SingularPadeSystem(SSXError):
    pass


class NegativeRatio(SSXError):
    """Padé leading-coefficient ratio is non-positive.

    Attributes:
        ratio: the offending ratio.
    """

    def __init__(self, message, ratio=None):
        super().__init__(message)
        self.ratio = ratio


class ParseError(SSXError):
    pass


class InvariantViolation(SSXError):
    pass


class UnknownFunction(SSXError):
    pass


class PrecisionLoss(SSXError):
    pass
