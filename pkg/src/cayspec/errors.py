"""Exception types raised across the package."""


class CayspecError(Exception):
    """Base class for every error raised by cayspec."""


class InvalidPermutation(CayspecError, ValueError):
    pass


class OrderCapExceeded(CayspecError):
    pass


class NotNormal(CayspecError, ValueError):
    pass


class UnknownGroupName(CayspecError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown group"


class CertificationFailed(CayspecError):
    """The computed character table failed an exact orthogonality check."""


class NotAHook(CayspecError, ValueError):
    pass


class SizeMismatch(CayspecError, ValueError):
    pass


class PrimeDoesNotDivideOrder(CayspecError, ValueError):
    pass


class IntegralityViolation(CayspecError):
    """A character-sum eigenvalue did not reduce to a rational integer."""


class NotPSolvable(CayspecError):
    pass


class NotSolvable(CayspecError):
    pass


class HypothesisNotMet(CayspecError):
    pass


class DimensionCap(CayspecError):
    pass


class ConvergenceFailure(CayspecError):
    pass


class CardinalityMismatch(CayspecError, ValueError):
    pass


class NTooLarge(CayspecError, ValueError):
    pass
