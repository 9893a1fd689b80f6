"""Package exception hierarchy."""


class ModuliLabError(Exception):
    """Base class for all package-specific errors."""


class MembershipError(ModuliLabError, ValueError):
    """A point fails the membership predicate of its moduli model."""


class SingularMatrixError(ModuliLabError, ZeroDivisionError):
    """A matrix that must be inverted is singular (or numerically so)."""


class ModelInconsistencyError(ModuliLabError, RuntimeError):
    """A computation contradicts a structural fact the model guarantees."""
