"""Exception types raised by the numrange package."""


class NumRangeError(Exception):
    """Base class for all numrange-specific errors."""


class NonHermitianInput(NumRangeError):
    """Matrix handed to the Hermitian eigensolver is not Hermitian within tolerance."""


class ZeroOperator(NumRangeError):
    """Operation requires a nonzero operator (numerical radius above the zero band)."""


class ZeroSet(NumRangeError):
    """Point set is {0}; the translation lemma excludes it."""


class ZeroLambda(NumRangeError):
    """Scalar argument must be nonzero."""


class NotNormaloid(NumRangeError):
    """Witness construction requires a normaloid operator."""


class DimensionTooLarge(NumRangeError):
    """Matrix or sequence dimension exceeds the supported cap."""


class LambdaOutOfDisk(NumRangeError):
    """Scalar lies outside the closed disk of radius M_x."""


class InvalidSpec(NumRangeError):
    """Ensemble specification failed validation."""
