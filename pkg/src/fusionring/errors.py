"""Exception hierarchy shared by every module of the package."""


class FusionRingError(Exception):
    """Base class for user-facing validation errors."""


class NotAGroup(FusionRingError):
    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


class OrderCapExceeded(FusionRingError):
    pass


class BasisMismatch(FusionRingError):
    pass


class NotInImage(FusionRingError):
    """A mark vector has no integral preimage; ``solution`` holds the rational one."""

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution


class NotAHomomorphism(FusionRingError):
    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


class NotSylow(FusionRingError):
    pass


class NotASubgroupOfS(FusionRingError):
    pass


class NotFStable(FusionRingError):
    pass


class DenominatorDivisibleByP(FusionRingError):
    pass


class RingMismatch(FusionRingError):
    pass


class NoAmbientData(FusionRingError):
    pass


class NoSolution(AssertionError):
    """The alpha-basis construction failed; only possible for a non-saturated input or a bug."""


class NotIntegral(AssertionError):
    pass
