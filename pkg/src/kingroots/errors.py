"""Exception hierarchy shared by every kingroots module."""


class KingRootsError(Exception):
    """Base class for all library errors."""


class PrecisionTooLowError(KingRootsError, ValueError):
    pass


class ContextMismatchError(KingRootsError, TypeError):
    """Raised when values bound to different precision contexts are combined."""


class DomainError(KingRootsError, ValueError):
    def __init__(self, function, argument, message=None):
        self.function = function
        self.argument = argument
        super().__init__(message or f"{function}: argument {argument} outside domain")


class DecimalFormatError(KingRootsError, ValueError):
    pass


class CoincidentNodesError(KingRootsError):
    """Interpolation nodes are closer than working precision can separate.

    Kernels attach the partially completed step as ``record`` when they have one,
    so the driver can treat the signal as convergence without losing the iterate.
    """

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = record


class ArityError(KingRootsError, ValueError):
    pass


class DegenerateDenominatorError(KingRootsError, ZeroDivisionError):
    def __init__(self, term, message=None):
        self.term = term
        super().__init__(message or f"denominator {term} vanished")


class ZeroDerivativeError(KingRootsError, ZeroDivisionError):
    pass


class InsufficientDataError(KingRootsError, ValueError):
    pass


class NonDecreasingTailError(KingRootsError, ValueError):
    pass


class ConvergenceError(KingRootsError):
    pass


class BasinEscapeError(ConvergenceError):
    pass


class ResidualTooLargeError(ConvergenceError):
    pass


class ExpressionError(KingRootsError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at column {position})"
        super().__init__(message)


class ConfigError(KingRootsError, ValueError):
    pass


class ReportError(KingRootsError):
    pass
