"""Exception types raised across the package."""


class RealSchubertError(Exception):
    """Base class for all package errors."""


class ConstraintViolation(RealSchubertError, ValueError):
    """A multiplicity vector or configuration breaks the admissibility constraints."""


class MalformedNet(RealSchubertError, ValueError):
    pass


class MalformedTableau(RealSchubertError, ValueError):
    pass


class BlockTooLarge(RealSchubertError, ValueError):
    pass


class DegenerateSubspace(RealSchubertError, ValueError):
    """The 2 x (d+1) coefficient matrix does not have rank 2."""


class WrongCodimension(RealSchubertError, ValueError):
    pass


class NotAFlagProblem(RealSchubertError, ValueError):
    pass


class GaugeFailure(RealSchubertError, RuntimeError):
    """Every ordered pair of blocks was tried as a gauge and all of them failed."""
