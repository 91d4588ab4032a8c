"""k-very ampleness of powers of the polarization.

phi(L^n) is the largest k such that L^n is k-very ample.  For an abelian
surface L^n is k-very ample iff every L^n (x) I_X with |X| <= k + 1 is IT_0,
so each threshold below is "largest IT_0 length minus one".

The pipelines re-run the numerical content of the arguments: Bogomolov for
n = 1, and for n >= 2 a wall classification plus induction on n, checked
against the closed formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import PreconditionError, VerificationError
from .lattice import (
    Character,
    Surface,
    bogomolov_holds,
    dual,
    euler_pairing,
    fm,
    gieseker_nonempty,
    ideal_twist_character,
    twist,
)
from .stability import format_rational
from .walls import Wall, classify_walls_theorem


def phi_formula(surface: Surface, n: int) -> int:
    if n < 1:
        raise PreconditionError(f"phi needs n >= 1, got {n}")
    d = surface.d
    if n == 1:
        return (d - 3) // 2
    return 2 * d * (n - 1) - 2


def it0_torsion_moduli(surface: Surface, chi: int) -> bool:
    """Whether every Gieseker semistable sheaf of character (0, l, chi) is IT_0.

    Transforming and dualizing identifies these with sheaves of character
    (chi, l, 0); a non-locally-free one exists iff (chi, l, 1) has nonempty
    moduli, which for chi <= 0 is automatic from Bogomolov.
    """
    witness = Character(chi, 1, 1)
    if witness.is_positive():
        non_locally_free = gieseker_nonempty(surface, witness)
    else:
        non_locally_free = bogomolov_holds(surface, witness)
    return not non_locally_free


def _it0_ideal_twist_n1(surface: Surface, x: int) -> bool:
    # Phi(L (x) I_X) has character (d - x, -l, 1); it fails to be locally free
    # iff some stable sheaf of character (d - x, -l, 2) exists.
    d = surface.d
    e = ideal_twist_character(surface, 1, x)
    if fm(e) != Character(d - x, -1, 1):
        raise VerificationError(f"unexpected transform {fm(e)} of {e}")
    return not bogomolov_holds(surface, dual(Character(d - x, -1, 2)))


def phi1_pipeline(surface: Surface) -> int:
    """phi(L) from the Bogomolov criterion: largest IT_0 length minus one."""
    x = 0
    if not _it0_ideal_twist_n1(surface, 0):
        raise VerificationError("L itself should be IT_0")
    # IT_0 fails once 2(d - x) <= d, and stays failed for larger x
    while _it0_ideal_twist_n1(surface, x + 1):
        x += 1
    return x - 1


def phi_upper_witness(surface: Surface, n: int) -> tuple[int, int]:
    """Upper bound phi(L^n) <= 2d(n-1) - 2, witnessed by an Euler characteristic.

    A non-IT_0 Q of character (0, l, d) has chi(L^{-(n-1)} (x) Q) = d(3 - 2n) < 0,
    hence Ext^1(Q, L^{n-1}) != 0; the extension is L^n (x) I_X with
    |X| = 2d(n-1), which is not IT_0.
    """
    if n < 2:
        raise PreconditionError(f"upper bound needs n >= 2, got {n}")
    d = surface.d
    q = Character(0, 1, d)
    if it0_torsion_moduli(surface, q.chi):
        raise VerificationError("(0, l, d) should admit a non-IT_0 member")
    line = Character(1, n - 1, (n - 1) ** 2 * d)
    witness = euler_pairing(surface, line, q)
    if witness != twist(surface, q, -(n - 1)).chi or witness >= 0:
        raise VerificationError(f"Euler characteristic witness {witness} is not negative")
    extension = line + q
    if extension != ideal_twist_character(surface, n, 2 * d * (n - 1)):
        raise VerificationError(f"extension class {extension} is not an ideal twist of length 2d(n-1)")
    return 2 * d * (n - 1) - 2, witness


@dataclass(frozen=True)
class PPAVObstruction:
    quotient: Character
    transform: Character
    bound: int


def ppav_obstruction(surface: Surface, n: int) -> PPAVObstruction:
    """For a principal polarization, L^n is not (2n-3)-very ample.

    X of length 2(n-1) on the theta divisor gives a quotient Q = (0, l, 1); an
    IT_0 Q would transform to a locally free sheaf of character (1, -l, 0),
    which cannot be.
    """
    if surface.d != 1:
        raise PreconditionError(f"principally polarized case needs d = 1, got d = {surface.d}")
    if n < 2:
        raise PreconditionError(f"needs n >= 2, got {n}")
    x = 2 * (n - 1)
    quotient = Character(0, 1, 2 * n - 1 - x)
    if ideal_twist_character(surface, n, x) - Character(1, n - 1, (n - 1) ** 2) != quotient:
        raise VerificationError("quotient character mismatch")
    transform = fm(quotient)
    if transform != Character(1, -1, 0):
        raise VerificationError(f"transform {transform} is not (1, -l, 0)")
    bound = 2 * n - 4
    if bound != phi_formula(surface, n):
        raise VerificationError(f"bound {bound} differs from phi_formula")
    return PPAVObstruction(quotient, transform, bound)


def z_length_bound(surface: Surface, n: int) -> int:
    """Largest z >= 0 with ((n-1)^2 d + d + 1)(1 + z) <= n^2 d, or -1 if none.

    This bounds the length of H^0 of the transform of a non-IT_0 ideal twist
    with |X| = 2d(n-1) - 1; it is always 0.
    """
    if n < 2:
        raise PreconditionError(f"needs n >= 2, got {n}")
    d = surface.d
    a = (n - 1) ** 2 * d + d + 1
    max_z = n * n * d // a - 1
    # the closed-form argument: dn^2 - 2d(n-1) + 1 > 2d(n-1) - 1
    if not d * n * n - 2 * d * (n - 1) + 1 > 2 * d * (n - 1) - 1:
        raise VerificationError("|Z| < 1 argument fails")
    if max_z != 0:
        raise VerificationError(f"|Z| bound admits z = {max_z}")
    return max_z


@dataclass(frozen=True)
class Bounds:
    trivial_upper: int
    terakawa: Fraction
    reider_lower: int

    def to_json(self) -> dict:
        return {
            "trivial": self.trivial_upper,
            "terakawa": format_rational(self.terakawa),
            "reider": self.reider_lower,
        }


def ceil_sqrt(m: int) -> int:
    """Smallest integer k with k^2 >= m (m >= 0)."""
    k = math.isqrt(m)
    return k if k * k == m else k + 1


def bounds(surface: Surface, n: int) -> Bounds:
    """Classical bounds on phi(L^n): chi(L^n) - 1, Terakawa, and Reider."""
    if n < 1:
        raise PreconditionError(f"bounds need n >= 1, got {n}")
    d = surface.d
    return Bounds(
        trivial_upper=n * n * d - 1,
        terakawa=Fraction(n * n * d - 3, 2),
        # ceil(n sqrt(2d)) = ceil(sqrt(2 d n^2))
        reider_lower=ceil_sqrt(2 * d * n * n) - 3,
    )


@dataclass
class PhiReport:
    d: int
    n: int
    phi_formula: int
    phi_pipeline: Optional[int]
    walls_used: list[Wall]
    bounds: Bounds
    base_case_ok: bool = True
    induction_ok: bool = True
    z_bound_ok: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.phi_formula == self.phi_pipeline
            and self.base_case_ok
            and self.induction_ok
            and self.z_bound_ok
        )

    def to_json(self, precision: int = 12) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "phi": self.phi_formula,
            "phi_pipeline": self.phi_pipeline,
            "walls": [w.to_json(precision) for w in self.walls_used],
            "bounds": self.bounds.to_json(),
            "checks": {
                "z_bound": self.z_bound_ok,
                "base_case": self.base_case_ok,
                "induction": self.induction_ok,
            },
        }


def _theorem_step(surface: Surface, n: int, notes: list[str]) -> tuple[list[Wall], bool]:
    """Walls for n and whether every wall is crossed by IT_0 pieces.

    A destabilizer L^{n-1} (x) I_Y needs |Y| <= 2d(n-2) - 1 to be IT_0 by
    induction, and the quotient Q has chi = 1 + d + |Y|, which makes it IT_0.
    """
    d = surface.d
    report = classify_walls_theorem(surface, n)
    notes.extend(report.failures)
    ok = report.passed
    for u in report.destabilizers:
        k = (n - 1) ** 2 * d - u.chi
        if not k <= 2 * d * (n - 2) - 1:
            ok = False
            notes.append(f"n={n}: destabilizer {u} not covered by the induction hypothesis")
        quotient = report.target - u
        if quotient != Character(0, 1, 1 + d + k):
            ok = False
            notes.append(f"n={n}: quotient {quotient} has unexpected character")
        if not it0_torsion_moduli(surface, quotient.chi):
            ok = False
            notes.append(f"n={n}: quotient {quotient} is not IT_0")
    return report.walls, ok


def phi_pipeline(surface: Surface, n: int, strict: bool = True) -> PhiReport:
    """Recompute phi(L^n) from walls, the |Z| bound and the upper-bound witness.

    With ``strict`` a failed check raises VerificationError; otherwise the
    report is returned with the failing flags set.
    """
    if n < 1:
        raise PreconditionError(f"phi needs n >= 1, got {n}")
    formula = phi_formula(surface, n)
    if n == 1:
        report = PhiReport(surface.d, 1, formula, phi1_pipeline(surface), [], bounds(surface, 1))
    else:
        notes: list[str] = []
        z_ok = True
        try:
            z_length_bound(surface, n)
        except VerificationError as exc:
            z_ok = False
            notes.append(str(exc))
        base_walls, base_ok = _theorem_step(surface, 2, notes)
        base_ok = base_ok and not base_walls
        walls: list[Wall] = base_walls
        induction_ok = True
        for m in range(3, n + 1):
            walls, step_ok = _theorem_step(surface, m, notes)
            induction_ok = induction_ok and step_ok
        upper, _ = phi_upper_witness(surface, n)
        computed: Optional[int] = None
        if base_ok and induction_ok and z_ok:
            # every twist of length 2d(n-1) - 1 is IT_0, so phi >= 2d(n-1) - 2
            lower = 2 * surface.d * (n - 1) - 2
            if lower == upper:
                computed = upper
        report = PhiReport(
            surface.d, n, formula, computed, walls, bounds(surface, n),
            base_case_ok=base_ok, induction_ok=induction_ok, z_bound_ok=z_ok, notes=notes,
        )
    if strict and not report.ok:
        raise VerificationError(
            f"phi pipeline failed for d={surface.d}, n={n}: " + "; ".join(report.notes or ["mismatch"])
        )
    return report
