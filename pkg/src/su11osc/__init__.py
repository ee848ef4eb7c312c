"""Angle-action quantization of the harmonic oscillator with a free Bargmann index k."""

from .errors import ConvergenceError, DomainError, SingularPointError, TruncationError
from .repcore import BargmannIndex, CoverElement, TruncatedRep, build_rep

__version__ = "0.1.0"

__all__ = [
    "BargmannIndex",
    "ConvergenceError",
    "CoverElement",
    "DomainError",
    "SingularPointError",
    "TruncatedRep",
    "TruncationError",
    "build_rep",
    "__version__",
]
