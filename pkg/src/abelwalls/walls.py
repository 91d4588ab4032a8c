"""Numerical walls for sigma_{s,t} and their enumeration along s = 0.

Equating the slopes of u and v gives, with the 2x2 minors

    W = r_u c_v - r_v c_u,   B = chi_u r_v - chi_v r_u,   N = chi_u c_v - chi_v c_u,

the locus  d W (s^2 + t^2) + B s - N = 0.  For W != 0 this is a circle centred
on the s-axis; at s = 0 it meets the t-axis at t^2 = N / (dW).  Every minor is
invariant under u -> u + v and flips sign under u <-> v, so the locus depends
only on the plane spanned by u and v.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .errors import NotApplicableError, PreconditionError, UnsupportedTargetError, VerificationError
from .lattice import Character, Surface, bogomolov_holds, fm, ideal_twist_character
from .stability import StabilityPoint, destabilizing_numerator, format_rational

S0_POINT = "s0-point"
CIRCLE = "circle"
VERTICAL_LINE = "vertical-line"
EVERYWHERE = "everywhere"
NOWHERE = "nowhere"


@dataclass(frozen=True)
class WallLocus:
    """Solution set of mu_{s,t}(u) = mu_{s,t}(v) in the upper half plane.

    ``center``/``radius_sq`` describe (s - center)^2 + t^2 = radius_sq for the
    two circular kinds; ``q0`` is t^2 where the circle meets s = 0 (s0-point
    only); ``line_s`` is the abscissa of a vertical-line locus.
    """

    kind: str
    q0: Optional[Fraction] = None
    center: Optional[Fraction] = None
    radius_sq: Optional[Fraction] = None
    line_s: Optional[Fraction] = None

    @property
    def meets_s0(self) -> bool:
        return self.kind == S0_POINT


def _minors(u: Character, v: Character) -> tuple[int, int, int]:
    w = u.r * v.c - v.r * u.c
    b = u.chi * v.r - v.chi * u.r
    n = u.chi * v.c - v.chi * u.c
    return w, b, n


def numerical_wall(surface: Surface, u: Character, v: Character) -> WallLocus:
    if u.is_zero or v.is_zero or (v - u).is_zero:
        raise PreconditionError("numerical_wall needs u, v and v - u nonzero")
    d = surface.d
    w, b, n = _minors(u, v)
    if w == 0:
        if b == 0:
            # all minors vanish exactly when u and v are proportional
            return WallLocus(EVERYWHERE) if n == 0 else WallLocus(NOWHERE)
        return WallLocus(VERTICAL_LINE, line_s=Fraction(n, b))
    center = Fraction(-b, 2 * d * w)
    radius_sq = Fraction(n, d * w) + center * center
    if radius_sq <= 0:
        return WallLocus(NOWHERE)
    q0 = Fraction(n, d * w)
    kind = S0_POINT if q0 > 0 else CIRCLE
    return WallLocus(kind, q0=q0 if q0 > 0 else None, center=center, radius_sq=radius_sq)


def wall_q0(surface: Surface, u: Character, v: Character) -> Optional[Fraction]:
    """t^2 of the wall at s = 0, or None if the locus does not cross s = 0."""
    return numerical_wall(surface, u, v).q0


def t_approx(q: Fraction, precision: int = 12) -> decimal.Decimal:
    """sqrt(q) rounded to ``precision`` significant digits (display only)."""
    q = Fraction(q)
    work = decimal.Context(prec=precision + 10)
    root = work.sqrt(work.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator)))
    return decimal.Context(prec=precision, rounding=decimal.ROUND_HALF_EVEN).plus(root)


@dataclass(frozen=True)
class Wall:
    """A wall at s = 0 for a fixed target; all destabilizers share ``q0``.

    ``f_positive_side`` says where the destabilizers have the larger slope:
    "below" means for t^2 < q0.
    """

    q0: Fraction
    destabilizers: tuple[Character, ...]
    f_positive_side: str

    def to_json(self, precision: int = 12) -> dict:
        return {
            "q0": format_rational(self.q0),
            "t_approx": float(t_approx(self.q0, precision)),
            "destabilizers": [u.to_json() for u in self.destabilizers],
            "f_positive_side": self.f_positive_side,
        }

    @classmethod
    def from_json(cls, data: dict) -> Wall:
        return cls(
            Fraction(data["q0"]),
            tuple(Character.from_json(u) for u in data["destabilizers"]),
            data["f_positive_side"],
        )


def _check_target(v: Character) -> None:
    if v.r not in (0, 1) or v.c < 1:
        raise UnsupportedTargetError(
            f"wall enumeration supports targets (r, c, chi) with r in {{0, 1}} and c >= 1, got {v}"
        )


def quotient_discriminant(surface: Surface, u: Character, v: Character) -> int:
    """d c^2 - r chi of the quotient class v - u (>= 0 iff Bogomolov holds for it)."""
    q = v - u
    return surface.d * q.c * q.c - q.r * q.chi


def rank_bound(surface: Surface, v: Character, c_u: int) -> int:
    """Largest rank a destabilizer with c-coefficient ``c_u`` can have.

    chi_v > 0: positivity of the wall, chi_u > chi_v c_u / c_v, together with
    Bogomolov r_u chi_u <= d c_u^2 gives r_u < d c_u c_v / chi_v.
    chi_v <= 0: then chi_u - chi_v >= 1, and Bogomolov for the quotient gives
    (r_u - r_v)(chi_u - chi_v) <= d (c_v - c_u)^2.
    """
    d = surface.d
    if v.chi > 0:
        return (d * c_u * v.c) // v.chi
    return v.r + d * (v.c - c_u) ** 2


def _wall_candidate(surface: Surface, u: Character, v: Character) -> Optional[tuple[Fraction, str]]:
    """Apply filters (c)-(f) to a candidate already inside the c/r range."""
    if not bogomolov_holds(surface, u):
        return None
    if quotient_discriminant(surface, u, v) < 0:
        return None
    w, _, n = _minors(u, v)
    if w == 0:
        return None
    q0 = Fraction(n, surface.d * w)
    if q0 <= 0:
        return None
    # f(u, v) at s = 0 equals d W (q0 - q)
    return q0, ("below" if w > 0 else "above")


def candidates_for_c(surface: Surface, v: Character, c_u: int) -> Iterator[tuple[Character, Fraction, str]]:
    """All destabilizer candidates with a fixed c-coefficient; partitions the sweep."""
    d = surface.d
    chi_lo = (v.chi * c_u) // v.c + 1
    for r_u in range(1, rank_bound(surface, v, c_u) + 1):
        chi_hi = (d * c_u * c_u) // r_u
        for chi_u in range(chi_lo, chi_hi + 1):
            u = Character(r_u, c_u, chi_u)
            hit = _wall_candidate(surface, u, v)
            if hit is not None:
                yield u, hit[0], hit[1]


def enumerate_walls_s0(surface: Surface, v: Character) -> list[Wall]:
    """Candidate walls at s = 0 for the target ``v``, sorted by decreasing q0.

    Destabilizers are torsion-free (r_u >= 1), have 1 <= c_u <= c_v - 1,
    satisfy Bogomolov, leave a quotient satisfying Bogomolov, and cross v at
    some q0 > 0.  These are necessary conditions; the output may contain walls
    that no actual object realizes.
    """
    _check_target(v)
    groups: dict[Fraction, list[Character]] = {}
    sides: dict[Fraction, str] = {}
    for c_u in range(1, v.c):
        for u, q0, side in candidates_for_c(surface, v, c_u):
            groups.setdefault(q0, []).append(u)
            if sides.setdefault(q0, side) != side:
                raise VerificationError(f"inconsistent wall orientation at q0 = {q0}")
    return [
        Wall(q0, tuple(sorted(groups[q0], key=lambda u: (u.r, u.c, u.chi))), sides[q0])
        for q0 in sorted(groups, reverse=True)
    ]


def no_walls_check(surface: Surface, r: int, chi: int) -> bool:
    """Witness that (r, 1, chi) has no walls at s = 0.

    A subobject in A_0 has 0 <= c_u <= 1: c_u = 0 destabilizes for every t and
    c_u = 1 leaves a quotient of infinite slope that never destabilizes, so the
    destabilizer range 1 <= c_u <= 0 is empty.  For r in {0, 1} the enumerator
    is also run and must agree.
    """
    v = Character(r, 1, chi)
    structural = len(range(1, v.c)) == 0
    if r in (0, 1):
        enumerated = not enumerate_walls_s0(surface, v)
        if enumerated != structural:
            raise VerificationError(f"enumerator found walls for {v}")
    return structural


@dataclass
class ClassificationReport:
    d: int
    n: int
    target: Character
    walls: list[Wall]
    rank_bound: Fraction
    rank_ok: bool = True
    twist_ok: bool = True
    length_ok: bool = True
    shape_ok: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.rank_ok and self.twist_ok and self.length_ok and self.shape_ok

    @property
    def destabilizers(self) -> list[Character]:
        return [u for w in self.walls for u in w.destabilizers]


def theorem_target(surface: Surface, n: int) -> Character:
    """L^n (x) I_X with |X| = 2d(n-1) - 1."""
    return ideal_twist_character(surface, n, 2 * surface.d * (n - 1) - 1)


def classify_walls_theorem(surface: Surface, n: int) -> ClassificationReport:
    """Enumerate the walls of L^n (x) I_X, |X| = 2d(n-1) - 1, and check that every
    destabilizer is L^{n-1} (x) I_Y with 0 <= |Y| < d(n-2) - 1.

    The rank and twist bounds are re-checked as exact inequalities: a wall
    needs 1/r > ((n-1)^2 d + d + 1) / (d n^2) >= 1/2, and a destabilizer
    L^{n-m} (x) I_Y needs (1 - m/n)(2dn - dnm - 2d - 1) > |Y| >= 0.
    """
    if n < 2:
        raise PreconditionError(f"wall classification needs n >= 2, got {n}")
    d = surface.d
    v = theorem_target(surface, n)
    walls = enumerate_walls_s0(surface, v)
    bound = Fraction((n - 1) ** 2 * d + d + 1, d * n * n)
    report = ClassificationReport(d, n, v, walls, bound)

    if bound < Fraction(1, 2):
        report.rank_ok = False
        report.failures.append(f"rank bound {bound} < 1/2")

    # no (m, |Y|) with m >= 2 can satisfy the twist inequality
    for m in range(2, n):
        if 2 * d * n - d * n * m - 2 * d - 1 > 0:
            report.twist_ok = False
            report.failures.append(f"twist inequality admits m = {m}")

    max_len = d * (n - 2) - 1
    for u in report.destabilizers:
        m = n - u.c
        k = u.c * u.c * d - u.chi
        if u.r != 1 or Fraction(1, u.r) <= bound:
            report.rank_ok = False
            report.failures.append(f"{u}: rank not forced to 1")
        if m != 1 or not Fraction(n - m, n) * (2 * d * n - d * n * m - 2 * d - 1) > k:
            report.twist_ok = False
            report.failures.append(f"{u}: twist inequality fails (m = {m}, k = {k})")
        if not (0 <= k < max_len and Fraction(n - 1, n) * (d * n - 2 * d - 1) > k):
            report.length_ok = False
            report.failures.append(f"{u}: |Y| = {k} outside [0, {max_len})")
        if u != Character(1, n - 1, (n - 1) ** 2 * d - k):
            report.shape_ok = False
            report.failures.append(f"{u}: not of the form (1, n-1, (n-1)^2 d - k)")
    return report


def fm_wall_transport(surface: Surface, u: Character, v: Character) -> tuple[Fraction, Fraction]:
    """Wall values at s = 0 for (u, v) and for their Fourier-Mukai images.

    The minors of (fm u, fm v) are (-N, -B, -W), so the transported wall sits
    at q0' = 1 / (d^2 q0).
    """
    before = numerical_wall(surface, u, v)
    after = numerical_wall(surface, fm(u), fm(v))
    if not (before.meets_s0 and after.meets_s0):
        raise NotApplicableError(
            f"walls do not both meet s = 0 ({before.kind}, {after.kind})"
        )
    q0, q0t = before.q0, after.q0
    if q0t * q0 * surface.d ** 2 != 1:
        raise VerificationError(f"q0' = {q0t} is not 1/(d^2 q0) for q0 = {q0}")
    return q0, q0t
