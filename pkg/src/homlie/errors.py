"""Exception types shared across the package."""


class FieldMismatchError(ValueError):
    """Operands or structures belong to different scalar fields."""


class ReductionError(ValueError):
    """A rational cannot be reduced mod p (denominator divisible by p)."""


class ShapeError(ValueError):
    """Dimensions of vectors, maps or matrices do not line up."""


class SingularMatrixError(ValueError):
    """An invertible matrix was required but the given one is singular."""
