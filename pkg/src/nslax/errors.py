"""Exception hierarchy."""


class NSLaxError(Exception):
    """Base class for all library errors."""


class SingularMatrixError(NSLaxError, ArithmeticError):
    pass


class DimensionMismatchError(NSLaxError, ValueError):
    pass


class NotDivisibleError(NSLaxError, ArithmeticError):
    """Exact polynomial division had a remainder."""


class NonHomogeneousError(NSLaxError, ValueError):
    """Interpolation data is inconsistent with a homogeneous polynomial of the requested degree."""


class ModeMismatchError(NSLaxError, TypeError):
    """Symbolic and specialized data were combined."""


class DegenerateParameterError(NSLaxError):
    """The chosen (e1, e2) or u0 makes a required separation fail (collision of contents or eigenvalues)."""


class ResolventPoleError(DegenerateParameterError):
    """u0 lies in the spectrum of the operator being inverted."""


class TheoremViolationError(NSLaxError, AssertionError):
    """A structural identity that must hold exactly failed to hold."""
