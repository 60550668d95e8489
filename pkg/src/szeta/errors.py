"""Exception types raised across the package."""


class SzetaError(Exception):
    """Base class for every error raised by szeta."""


class PoleError(SzetaError, ValueError):
    """Gamma (or a ratio built from it) evaluated at a pole."""


class DivergenceError(SzetaError, ArithmeticError):
    """A series or zeta sum that does not converge."""


class ParameterError(SzetaError, ValueError):
    """An argument outside the supported domain."""


class ConvergenceError(SzetaError, ArithmeticError):
    """An iterative solver failed to reach its target."""


class ZeroConstantTermError(SzetaError, ZeroDivisionError):
    """Reciprocal or log-derivative of a series vanishing at the origin."""


class PrecisionError(SzetaError, ArithmeticError):
    """Two routes disagree beyond tolerance, or residue left by rounding is too large."""


class DepthLimitError(SzetaError, ValueError):
    """Nested-sum request deeper than the engine supports."""
