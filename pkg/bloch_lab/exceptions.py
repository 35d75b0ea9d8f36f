class BlochLabError(ValueError):
    """Base class for every error raised by bloch_lab."""


class DiskDomainError(BlochLabError):
    """An argument lies outside the domain of the operation."""


class NotSensePreservingError(BlochLabError):
    """The Jacobian is not positive where a quasiregular path needs it."""


class NonFiniteObjectiveError(BlochLabError):
    """A supremum objective returned NaN or an infinite value."""


class DegenerateDilatationError(BlochLabError):
    """The dilatation g'/h' is undefined because h' vanishes."""


class CodexError(BlochLabError):
    """A serialized polynomial, map or report could not be decoded."""
