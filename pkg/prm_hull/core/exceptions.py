class PRMError(ValueError):
    """Base class for every domain error raised by prm_hull."""


class NotPrimePowerError(PRMError):
    pass


class FieldTooLargeError(PRMError):
    pass


class DegreeOutOfRangeError(PRMError):
    pass


class IntervalMismatchError(PRMError):
    pass


class DimensionMismatchError(PRMError):
    pass


class ConstantMonomialError(PRMError):
    pass


class NotReducibleError(PRMError):
    pass


class SingularMatrixError(PRMError):
    """Raised when an inversion meets a singular matrix (the P block included)."""
