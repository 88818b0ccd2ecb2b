"""Exception types shared across the package."""


class ExpwaveError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ExpwaveError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class InvalidParamsError(ExpwaveError, ValueError):
    """Equation or frame parameters violate a structural constraint."""


class FrameDegenerateError(InvalidParamsError):
    """Traveling frame with k = +/-omega (gamma = 0) or lambda = 0."""


class UnsupportedFamilyError(ExpwaveError, ValueError):
    """Operation not defined for the requested equation family."""


class CaseMismatchError(ExpwaveError, ValueError):
    """Constructor arguments are inconsistent with the requested case label."""


class SignDomainError(DomainError):
    """Sign condition on lambda*gamma (or c1) incompatible with the case."""


class PoleProximityError(DomainError):
    """Evaluation point too close to a pole of an elliptic function.

    Carries the distance to the nearest pole and the exclusion radius so
    callers can widen their grids deterministically.
    """

    def __init__(self, message, distance, limit):
        super().__init__(message)
        self.distance = distance
        self.limit = limit


class ConvergenceError(DomainError):
    """A series or iteration failed to reach its accuracy target inside the
    implemented transformation region."""


class EmptyGridError(ExpwaveError, ValueError):
    """All grid points were removed by singularity exclusions."""


class StepSizeUnderflowError(ExpwaveError, RuntimeError):
    """Adaptive integrator step collapsed, normally near a blow-up.

    Not fatal to a verification suite: the caller may catch it and record
    the partial span that was integrated (see the ``span_reached`` field).
    """

    def __init__(self, message, span_reached):
        super().__init__(message)
        self.span_reached = span_reached
