"""Zeta and multiple zeta values over the zeros of Kummer, Bessel and Airy functions."""

from .errors import (
    ConvergenceError,
    DepthLimitError,
    DivergenceError,
    ParameterError,
    PoleError,
    PrecisionError,
    SzetaError,
    ZeroConstantTermError,
)
from .numkernel import DEFAULT_CONTEXT, PrecisionContext

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DepthLimitError",
    "DivergenceError",
    "ParameterError",
    "PoleError",
    "PrecisionError",
    "SzetaError",
    "ZeroConstantTermError",
    "DEFAULT_CONTEXT",
    "PrecisionContext",
]
