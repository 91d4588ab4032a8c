"""Central charge and slopes of the stability conditions sigma_{s,t}.

Points are parametrized by (s, q) with q = t^2, which keeps every quantity
rational.  The imaginary part of Z_{s,t} is t times a rational, so we store
that rational (``im_coeff``) and never touch t itself.  ``reduced_slope``
returns t * mu_{s,t}; at a fixed point the factor t is shared, so every
comparison of slopes is unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PreconditionError
from .lattice import Character, Surface

Rational = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' strings")
    return Fraction(x)


@dataclass(frozen=True)
class StabilityPoint:
    s: Fraction
    q: Fraction

    def __init__(self, s: Rational | str, q: Rational | str) -> None:
        object.__setattr__(self, "s", _frac(s))
        object.__setattr__(self, "q", _frac(q))
        if self.q <= 0:
            raise PreconditionError(f"q = t^2 must be positive, got {self.q}")

    @classmethod
    def at_s0(cls, q: Rational | str) -> StabilityPoint:
        return cls(0, q)

    def to_json(self) -> dict:
        return {"s": format_rational(self.s), "q": format_rational(self.q)}

    @classmethod
    def from_json(cls, data: dict) -> StabilityPoint:
        return cls(Fraction(data["s"]), Fraction(data["q"]))


@dataclass(frozen=True)
class ChargeValue:
    """Z = re + i * t * im_coeff."""

    re: Fraction
    im_coeff: Fraction

    def __add__(self, other: ChargeValue) -> ChargeValue:
        return ChargeValue(self.re + other.re, self.im_coeff + other.im_coeff)


def format_rational(x: Rational) -> str:
    """Canonical ``"num/den"`` form (denominator always printed, always positive)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _require_nonzero(u: Character) -> None:
    if u.is_zero:
        raise PreconditionError("the zero character has no central charge phase")


def central_charge(surface: Surface, u: Character, p: StabilityPoint) -> ChargeValue:
    """Z_{s,t}(u) = -chi + 2dcs + dr(t^2 - s^2) + 2tdi(c - rs)."""
    _require_nonzero(u)
    d, s, q = surface.d, p.s, p.q
    re = -u.chi + 2 * d * u.c * s + d * u.r * (q - s * s)
    im_coeff = 2 * d * (u.c - u.r * s)
    return ChargeValue(Fraction(re), Fraction(im_coeff))


def reduced_slope(surface: Surface, u: Character, p: StabilityPoint) -> Fraction | float:
    """t * mu_{s,t}(u); ``math.inf`` when Im Z vanishes."""
    z = central_charge(surface, u, p)
    if z.im_coeff == 0:
        return math.inf
    return -z.re / z.im_coeff


def heart_necessary(surface: Surface, u: Character, s: Rational) -> bool:
    """Numerical shadow of membership in the tilted heart A_s.

    Objects of A_s have Im Z >= 0, i.e. c >= rs.  A sheaf of positive rank in
    T_s has mu > 2ds, which is the strict c > rs.  Necessary only.
    """
    s = _frac(s)
    gap = u.c - u.r * s
    if u.r > 0:
        return gap > 0
    return gap >= 0


def destabilizing_numerator(
    surface: Surface, u: Character, v: Character, p: StabilityPoint
) -> Fraction:
    """Numerator f(u, v) of mu_{s,t}(u) - mu_{s,t}(v) over a common positive denominator.

    When both imaginary parts are positive, f > 0 exactly when u has the larger
    slope.  At s = 0 with v = (1, n, n^2 d - x) this is
    n chi_u - c_u (n^2 d - x - dq) - d n r_u q.
    """
    zu = central_charge(surface, u, p)
    zv = central_charge(surface, v, p)
    # im_coeff carries a factor 2d that the classical numerator does not
    return (-zu.re * zv.im_coeff + zv.re * zu.im_coeff) / (2 * surface.d)


def necessary_destabilizer_condition(surface: Surface, u: Character, v: Character) -> bool:
    """Necessary condition for ``u`` to destabilize the ideal twist ``v`` at s = 0:
    n chi - c n^2 d + c x > 0 together with c <= n r."""
    if v.r != 1 or v.c < 1:
        raise PreconditionError(f"target must be an ideal twist (1, n, n^2 d - x), got {v}")
    n = v.c
    x = n * n * surface.d - v.chi
    lhs = n * u.chi - u.c * n * n * surface.d + u.c * x
    return lhs > 0 and u.c <= n * u.r
