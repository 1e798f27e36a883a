"""Exception hierarchy shared by every module."""


class RdegenError(Exception):
    """Base class for all errors raised by rdegen."""


class ParameterError(RdegenError, ValueError):
    """Invalid sizes, ranges or malformed subsets."""


class EmptyRichardsonError(RdegenError, ValueError):
    """Raised when v is not below w, so the Richardson variety is empty."""


class CapabilityError(RdegenError):
    """A request exceeds the configured degree bound of the exact oracle."""


class UniquenessError(RdegenError):
    """The minimal-weight term of a Plucker form is attained more than once."""


class NormalizationError(RdegenError):
    """Row-sorting a tableau produced a column that is not strictly increasing."""


class ContractViolation(RdegenError, ValueError):
    """An input lies outside the domain on which an operation is defined."""
