"""Exact wall computations, Fourier-Mukai characters and k-very ampleness
thresholds for polarized abelian surfaces of Picard rank one."""

from .errors import (
    AbelWallsError,
    NotApplicableError,
    PreconditionError,
    SlopeUndefinedError,
    UnsupportedTargetError,
    VerificationError,
)
from .lattice import Character, Surface
from .stability import ChargeValue, StabilityPoint
from .walls import Wall, WallLocus

__all__ = [
    "AbelWallsError",
    "Character",
    "ChargeValue",
    "NotApplicableError",
    "PreconditionError",
    "SlopeUndefinedError",
    "StabilityPoint",
    "Surface",
    "UnsupportedTargetError",
    "VerificationError",
    "Wall",
    "WallLocus",
]
