import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from abelwalls import Character, PreconditionError, StabilityPoint, Surface
from abelwalls.stability import (
    central_charge,
    destabilizing_numerator,
    format_rational,
    heart_necessary,
    necessary_destabilizer_condition,
    reduced_slope,
)

from .conftest import nonzero_characters, surfaces

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
positive_q = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)
points = st.builds(StabilityPoint, rationals, positive_q)


def test_point_requires_positive_q():
    with pytest.raises(PreconditionError):
        StabilityPoint(0, 0)
    with pytest.raises(TypeError):
        StabilityPoint(0.5, 1)
    p = StabilityPoint("1/3", "5/2")
    assert p.to_json() == {"s": "1/3", "q": "5/2"}
    assert StabilityPoint.from_json(p.to_json()) == p


def test_format_rational():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(-4, 6)) == "-2/3"


def test_central_charge_examples():
    for d in (1, 3):
        for n, x in [(2, 1), (4, 5)]:
            u = Character(1, n, n * n * d - x)
            z = central_charge(Surface(d), u, StabilityPoint(0, Fraction(7, 3)))
            assert z.re == -(n * n * d - x) + d * Fraction(7, 3)
            assert z.im_coeff == 2 * d * n
    z = central_charge(Surface(4), Character(0, 0, 1), StabilityPoint(2, 9))
    assert (z.re, z.im_coeff) == (-1, 0)
    z = central_charge(Surface(1), Character(1, 1, 1), StabilityPoint(1, 1))
    assert (z.re, z.im_coeff) == (1, 0)


def test_central_charge_rejects_zero():
    with pytest.raises(PreconditionError):
        central_charge(Surface(1), Character(0, 0, 0), StabilityPoint(0, 1))


def test_reduced_slope_examples():
    d, n, x, q = 2, 3, 4, Fraction(5, 2)
    u = Character(1, n, n * n * d - x)
    assert reduced_slope(Surface(d), u, StabilityPoint(0, q)) == Fraction(n * n * d - x - d * q, 2 * d * n)
    assert reduced_slope(Surface(3), Character(0, 1, 5), StabilityPoint(0, 7)) == Fraction(5, 6)
    assert reduced_slope(Surface(3), Character(1, 0, 5), StabilityPoint(0, 7)) == math.inf


def _paper_slope_times_t(d, r, c, chi, s, t):
    # mu_{s,t} as a float, multiplied by t
    return (chi - 2 * d * c * s - d * r * (t * t - s * s)) / (2 * d * (c - r * s))


@given(surfaces, nonzero_characters, points)
def test_reduced_slope_matches_float_slope(s, u, p):
    assume(u.c - u.r * p.s != 0)
    t = math.sqrt(p.q)
    expected = _paper_slope_times_t(s.d, u.r, u.c, u.chi, float(p.s), t)
    assert float(reduced_slope(s, u, p)) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_heart_necessary():
    for n in range(1, 5):
        assert heart_necessary(Surface(1), Character(1, n, 0), 0)
    assert not heart_necessary(Surface(1), Character(1, 0, 3), 0)
    assert heart_necessary(Surface(1), Character(-1, 1, 0), 0)
    assert heart_necessary(Surface(1), Character(0, 0, 1), 0)
    assert not heart_necessary(Surface(1), Character(0, -1, 1), 0)
    assert heart_necessary(Surface(2), Character(2, 3, 0), Fraction(1, 1))
    assert not heart_necessary(Surface(2), Character(2, 3, 0), Fraction(3, 2))


def test_f_paper_example():
    # f = 4*9 - 3(11 - q) - 4q = 3 - q
    s = Surface(1)
    u, v = Character(1, 3, 9), Character(1, 4, 11)
    for q in [Fraction(1, 7), 1, Fraction(5, 2), 3, 4, 11]:
        assert destabilizing_numerator(s, u, v, StabilityPoint(0, q)) == 3 - Fraction(q)


def test_f_torsion_example():
    s = Surface(1)
    u, v = Character(0, 1, 2), Character(1, 2, 3)
    for q in [Fraction(1, 9), 1, 2, 50]:
        assert destabilizing_numerator(s, u, v, StabilityPoint(0, q)) == 1 + Fraction(q)


@given(surfaces, nonzero_characters, points)
def test_f_self_is_zero(s, u, p):
    assert destabilizing_numerator(s, u, u, p) == 0


@given(surfaces, nonzero_characters, nonzero_characters, points)
def test_f_antisymmetric(s, u, v, p):
    assert destabilizing_numerator(s, u, v, p) == -destabilizing_numerator(s, v, u, p)


@given(surfaces, nonzero_characters, nonzero_characters, points)
def test_f_sign_is_slope_order(s, u, v, p):
    zu, zv = central_charge(s, u, p), central_charge(s, v, p)
    assume(zu.im_coeff > 0 and zv.im_coeff > 0)
    f = destabilizing_numerator(s, u, v, p)
    diff = reduced_slope(s, u, p) - reduced_slope(s, v, p)
    assert (f > 0) == (diff > 0) and (f == 0) == (diff == 0)


@given(
    st.integers(1, 6), st.integers(1, 6), st.integers(0, 60),
    st.builds(Character, st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30)).filter(
        lambda u: not u.is_zero
    ),
    positive_q,
)
def test_f_matches_ideal_twist_display(d, n, x, u, q):
    v = Character(1, n, n * n * d - x)
    f = destabilizing_numerator(Surface(d), u, v, StabilityPoint(0, q))
    assert f == n * u.chi - u.c * (n * n * d - x - d * q) - d * n * u.r * q


@given(
    st.integers(1, 6), st.integers(1, 6), st.integers(0, 60),
    st.builds(Character, st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30)).filter(
        lambda u: not u.is_zero
    ),
    rationals, positive_q,
)
def test_f_matches_general_display(d, n, x, u, s, q):
    v = Character(1, n, n * n * d - x)
    f = destabilizing_numerator(Surface(d), u, v, StabilityPoint(s, q))
    expected = (
        (n - s) * u.chi
        - u.c * (n * n * d - x - d * (s * s + q))
        + u.r * (n * n * d * s - x * s - d * n * (s * s + q))
    )
    assert f == expected


@given(surfaces, nonzero_characters, nonzero_characters, points)
def test_central_charge_additive(s, u, v, p):
    assume(not (u + v).is_zero)
    assert central_charge(s, u + v, p) == central_charge(s, u, p) + central_charge(s, v, p)


def test_necessary_destabilizer_condition():
    s = Surface(1)
    assert necessary_destabilizer_condition(s, Character(1, 3, 9), Character(1, 4, 11))
    assert not necessary_destabilizer_condition(s, Character(1, 1, 0), Character(1, 2, 3))
    for d in range(1, 4):
        for n in range(1, 5):
            v = Character(1, n, n * n * d - 2)
            assert not necessary_destabilizer_condition(Surface(d), v, v)
    # c <= n r is part of the condition
    assert not necessary_destabilizer_condition(s, Character(0, 1, 5), Character(1, 4, 11))
    with pytest.raises(PreconditionError):
        necessary_destabilizer_condition(s, Character(1, 1, 1), Character(0, 1, 3))
