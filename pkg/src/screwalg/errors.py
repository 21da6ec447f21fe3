"""Exception types raised by screwalg."""


class ScrewAlgError(ValueError):
    """Base class for all library errors."""


class DimensionError(ScrewAlgError):
    """Operands live in spaces of different dimension."""


class DegenerateInputError(ScrewAlgError):
    """Input violates a non-degeneracy precondition (zero vector, dependent points)."""


class InconsistentDataError(ScrewAlgError):
    """Sampled data cannot come from any moment function."""
