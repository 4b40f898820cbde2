"""Exception taxonomy for the math layer.

Everything raised on bad input or broken invariants derives from KsymError,
so callers (notably the CLI) can map math failures to one exit code.
"""


class KsymError(Exception):
    """Base class for all library errors."""


class DimensionError(KsymError):
    """Vector or matrix dimensions do not match the ambient algebra."""


class FieldError(KsymError):
    """Mixed exact/floating scalars where a single field marker is required."""


class NotClosedError(KsymError):
    """A subspace is not closed under the bracket."""


class NotAutomorphismError(KsymError):
    """A matrix fails bracket compatibility or invertibility."""


class WrongOrderError(KsymError):
    """A claimed automorphism order is wrong.

    ``actual_order`` holds the true minimal order when it was determined
    (it is None when no power up to the claimed order gave the identity).
    """

    def __init__(self, message, actual_order=None):
        super().__init__(message)
        self.actual_order = actual_order


class InvariantViolationError(KsymError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class NotSemisimpleError(KsymError):
    """Operation requires a nondegenerate Killing form."""


class NotCentralError(KsymError):
    """A candidate element does not lie in the center of the fixed subalgebra."""


class NotSimpleError(KsymError):
    """Operation requires a simple Lie algebra."""


class PreconditionError(KsymError):
    """A documented precondition of an operation does not hold."""


class OutOfRangeError(KsymError):
    """A parameter is outside the supported desk-scale bounds."""
