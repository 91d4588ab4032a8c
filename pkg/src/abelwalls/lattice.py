"""Chern characters on a polarized abelian surface with NS(S) = <L>.

A character is the integer triple (r, c, chi) standing for ch = (r, c*l, chi),
where l = c_1(L) and l^2 = 2d.  On an abelian surface the Todd class is
trivial, so chi(E) = ch_2(E) and Riemann-Roch reduces to integer arithmetic.

Everything here is exact: Python ints and ``fractions.Fraction``.  Slopes of
torsion classes are the sentinels ``math.inf`` / ``-math.inf``, which compare
correctly against Fractions.

Tensoring by a degree-zero line bundle P_x has ch(P_x) = (1, 0, 0), so it acts
trivially on characters and has no counterpart in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import PreconditionError, SlopeUndefinedError

Slope = Union[Fraction, float]


@dataclass(frozen=True)
class Surface:
    """Polarized abelian surface of Picard rank one, determined by d = l^2 / 2."""

    d: int

    def __post_init__(self) -> None:
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise PreconditionError(f"d must be an integer, got {self.d!r}")
        if self.d < 1:
            raise PreconditionError(f"d must be >= 1, got {self.d}")

    def to_json(self) -> dict:
        return {"d": self.d}


@dataclass(frozen=True)
class Character:
    """Chern character (r, c*l, chi) in the rank-one Neron-Severi lattice."""

    r: int
    c: int
    chi: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.r, self.c, self.chi))

    def __add__(self, other: Character) -> Character:
        return Character(self.r + other.r, self.c + other.c, self.chi + other.chi)

    def __sub__(self, other: Character) -> Character:
        return Character(self.r - other.r, self.c - other.c, self.chi - other.chi)

    def __neg__(self) -> Character:
        return Character(-self.r, -self.c, -self.chi)

    def __mul__(self, k: int) -> Character:
        return Character(k * self.r, k * self.c, k * self.chi)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.r},{self.c},{self.chi})"

    @property
    def is_zero(self) -> bool:
        return self.r == 0 and self.c == 0 and self.chi == 0

    def is_positive(self) -> bool:
        """True for the characters of nonzero sheaves: r > 0, or torsion with c > 0,
        or zero-dimensional with chi > 0."""
        if self.r != 0:
            return self.r > 0
        if self.c != 0:
            return self.c > 0
        return self.chi > 0

    def to_json(self) -> list[int]:
        return [self.r, self.c, self.chi]

    @classmethod
    def from_json(cls, data) -> Character:
        r, c, chi = data
        return cls(int(r), int(c), int(chi))

    @classmethod
    def parse(cls, text: str) -> Character:
        """Parse the literal ``"r,c,chi"`` (brackets and spaces tolerated)."""
        parts = text.strip().strip("[]()").split(",")
        if len(parts) != 3:
            raise ValueError(f"expected 'r,c,chi', got {text!r}")
        return cls(*(int(p) for p in parts))


def ideal_twist_character(surface: Surface, n: int, x: int) -> Character:
    """ch(L^n (x) I_X) for a zero-dimensional subscheme X of length x."""
    if n < 1:
        raise PreconditionError(f"ideal twist needs n >= 1, got {n}")
    if x < 0:
        raise PreconditionError(f"subscheme length must be >= 0, got {x}")
    return Character(1, n, n * n * surface.d - x)


def twist(surface: Surface, u: Character, m: int) -> Character:
    """Tensor by L^m, i.e. multiply ch by e^{ml}."""
    d = surface.d
    return Character(u.r, u.c + u.r * m, u.chi + 2 * d * m * u.c + d * m * m * u.r)


def fm(u: Character) -> Character:
    """Action of the Poincare-bundle Fourier-Mukai transform: (r, c, chi) -> (chi, -c, r)."""
    return Character(u.chi, -u.c, u.r)


def dual(u: Character) -> Character:
    return Character(u.r, -u.c, u.chi)


def euler_pairing(surface: Surface, u: Character, v: Character) -> int:
    """Symmetric Riemann-Roch pairing r_u chi_v + r_v chi_u - 2d c_u c_v.

    For sheaves this is chi(E^* (x) F) up to the sign conventions of the
    abelian surface; in particular chi(L^{-m} (x) Q) = euler_pairing(ch(L^m), ch(Q)).
    """
    return u.r * v.chi + v.r * u.chi - 2 * surface.d * u.c * v.c


def mu_slope(surface: Surface, u: Character) -> Slope:
    """Mumford slope c_1.l / r = 2dc / r, with +-inf for torsion classes."""
    if u.r != 0:
        return Fraction(2 * surface.d * u.c, u.r)
    if u.c > 0:
        return math.inf
    if u.c < 0:
        return -math.inf
    raise SlopeUndefinedError(f"slope undefined for {u}: r = c = 0")


def bogomolov_holds(surface: Surface, u: Character) -> bool:
    # 2 r chi <= c_1^2 = 2 d c^2
    return u.r * u.chi <= surface.d * u.c * u.c


def virtual_dim(surface: Surface, u: Character) -> int:
    return 2 * u.c * u.c * surface.d - 2 * u.r * u.chi + 2


def gieseker_nonempty(surface: Surface, u: Character) -> bool:
    """Whether the moduli space of Gieseker (Simpson) semistable sheaves with
    character ``u`` is nonempty, i.e. whether its virtual dimension is >= 2.

    Only defined for positive characters; negative-slope classes should be
    dualized by the caller first.
    """
    if not u.is_positive():
        raise PreconditionError(f"{u} is not the character of a nonzero sheaf")
    return virtual_dim(surface, u) >= 2


def hilbert_reduced(surface: Surface, u: Character, m: int) -> Fraction:
    """Reduced Hilbert polynomial chi(E (x) L^m) / r evaluated at m."""
    if u.r == 0:
        raise PreconditionError(f"reduced Hilbert polynomial needs r != 0, got {u}")
    return Fraction(twist(surface, u, m).chi, u.r)
