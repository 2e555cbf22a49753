"""Exception types shared across the package."""


class DoubleTwistError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(DoubleTwistError, ValueError):
    """An argument violates a documented precondition (non-unit axis, out-of-domain parameter, ...)."""


class UndefinedAxisError(DoubleTwistError):
    """The rotation axis is requested at a point where the rotation is the identity."""


class HingeDegeneracyError(DoubleTwistError):
    """The target direction sits in the degenerate cone where the evaluation map stops being one-to-one."""


class EdgeDegenerateError(DoubleTwistError):
    """The requested rotation lies on the collapsed boundary of the homotopy rectangle."""


class SearchFailureError(DoubleTwistError):
    """A parameter search failed to reach its tolerance; indicates an implementation bug."""


class ResourceLimitError(DoubleTwistError):
    """A grid or bucket structure exceeded its configured size cap."""
