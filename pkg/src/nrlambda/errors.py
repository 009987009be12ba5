"""Exception types raised across the package."""


class AlgebraError(Exception):
    """Base class for every error this package raises on purpose."""


class NonDivisible(AlgebraError):
    """Integer division with a nonzero remainder."""


class RingMismatch(AlgebraError):
    """Operands cannot be placed in a common coefficient ring."""


class QAlgebraRequired(AlgebraError):
    """The operation divides by integers and the ring is not a Q-algebra."""


class IntegralityViolation(AlgebraError):
    """A result that must be integral came out with a fractional part."""


class HorizonExceeded(AlgebraError):
    """Read past the horizon of a truncated vector."""


class UnknownSupport(AlgebraError):
    """Support is undefined for a truncated necklace vector."""


class NotTShaped(AlgebraError):
    """Ghost vector is not in the image of the requested truncation."""


class CertificateViolation(AlgebraError):
    """Finite-support certificate failed; this would be a bug."""


class NotIntegerValued(AlgebraError):
    pass


class InternalDisagreement(AlgebraError):
    """Independent computations of the same quantity disagree."""


class LengthMismatch(AlgebraError):
    pass


class ParseError(AlgebraError):
    pass


class NotMAS(AlgebraError):
    """Matrix fails q_ij * q_ji == 1."""


class SizeLimit(AlgebraError):
    """Matrix would exceed the dense-oracle size cap."""


class NotDivisor(AlgebraError):
    pass


class InvalidHom(AlgebraError):
    pass
