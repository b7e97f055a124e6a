"""Exception types shared across the package."""


class ParameterOutOfRange(ValueError):
    """Family parameter below the smallest supported value."""


class DimensionMismatch(ValueError):
    """Operands disagree on vertex count or ground-set size."""


class ArityMismatch(ValueError):
    """A composition received a number of parts different from |V(H)|."""


class UnsupportedCombination(ValueError):
    """No structural expression or spectral prediction exists for this case."""


class NotIntegral(ValueError):
    """Integer-root extraction left a nonconstant factor.

    ``residual`` is the factor that has no integer roots in the candidate
    range; ``partial`` holds the (eigenvalue, multiplicity) pairs that were
    split off before the extraction stalled.
    """

    def __init__(self, residual, partial=()):
        self.residual = residual
        self.partial = tuple(partial)
        super().__init__(f"spectrum is not integral; residual factor {residual}")
