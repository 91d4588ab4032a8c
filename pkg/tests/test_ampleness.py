from fractions import Fraction

import pytest

from abelwalls import Character, PreconditionError, Surface, VerificationError
from abelwalls import ampleness
from abelwalls.ampleness import (
    bounds,
    ceil_sqrt,
    it0_torsion_moduli,
    phi1_pipeline,
    phi_formula,
    phi_pipeline,
    phi_upper_witness,
    ppav_obstruction,
    z_length_bound,
)
from abelwalls.lattice import gieseker_nonempty


@pytest.mark.parametrize("d, n, expected", [(1, 2, 0), (1, 1, -1), (3, 4, 16), (4, 1, 0), (2, 5, 14)])
def test_phi_formula(d, n, expected):
    assert phi_formula(Surface(d), n) == expected


def test_phi_formula_needs_positive_n():
    with pytest.raises(PreconditionError):
        phi_formula(Surface(1), 0)


def test_it0_torsion_moduli():
    for d in range(1, 9):
        s = Surface(d)
        assert not it0_torsion_moduli(s, d)
        assert it0_torsion_moduli(s, d + 1)
        for k in range(0, 10):
            assert it0_torsion_moduli(s, 1 + d + k)


@pytest.mark.parametrize("d", range(1, 9))
def test_it0_iff_no_nonlocally_free(d):
    s = Surface(d)
    for chi in range(-10, 3 * d):
        witness = Character(chi, 1, 1)
        if witness.is_positive():
            assert it0_torsion_moduli(s, chi) == (not gieseker_nonempty(s, witness))
        else:
            assert not it0_torsion_moduli(s, chi)


def _phi1_oracle(d):
    # largest x with every length <= x twist IT_0, i.e. 2(d - y) > d for y <= x
    x = max(y for y in range(0, d + 1) if all(2 * (d - z) > d for z in range(y + 1)))
    return x - 1


@pytest.mark.parametrize("d, expected", [(1, -1), (5, 1), (2, -1), (4, 0), (7, 2)])
def test_phi1_pipeline(d, expected):
    assert phi1_pipeline(Surface(d)) == expected == _phi1_oracle(d)


@pytest.mark.parametrize("d, n, expected", [(1, 3, (2, -3)), (2, 2, (2, -2)), (1, 2, (0, -1))])
def test_phi_upper_witness(d, n, expected):
    assert phi_upper_witness(Surface(d), n) == expected


def test_phi_upper_witness_needs_n_two():
    with pytest.raises(PreconditionError):
        phi_upper_witness(Surface(3), 1)


def test_ppav_obstruction():
    ob = ppav_obstruction(Surface(1), 2)
    assert ob.quotient == Character(0, 1, 1)
    assert ob.transform == Character(1, -1, 0)
    assert ob.bound == 0
    assert ppav_obstruction(Surface(1), 5).bound == 6
    assert ppav_obstruction(Surface(1), 3).bound == 2
    with pytest.raises(PreconditionError):
        ppav_obstruction(Surface(2), 3)


def _z_oracle(d, n):
    admissible = [z for z in range(0, n * n * d + 1) if ((n - 1) ** 2 * d + d + 1) * (1 + z) <= n * n * d]
    return max(admissible, default=-1)


@pytest.mark.parametrize("d, n", [(1, 2), (5, 8), (2, 3), (9, 9)])
def test_z_length_bound(d, n):
    assert z_length_bound(Surface(d), n) == _z_oracle(d, n) == 0


def test_ceil_sqrt():
    for m in range(0, 2000):
        expected = next(k for k in range(0, m + 2) if k * k >= m)
        assert ceil_sqrt(m) == expected


def test_bounds_examples():
    b = bounds(Surface(1), 2)
    assert (b.trivial_upper, b.terakawa, b.reider_lower) == (3, Fraction(1, 2), 0)
    assert bounds(Surface(2), 1).reider_lower == -1
    assert bounds(Surface(1), 1).trivial_upper == 0
    assert b.to_json() == {"trivial": 3, "terakawa": "1/2", "reider": 0}


@pytest.mark.parametrize(
    "d, n, phi, n_walls",
    [(1, 2, 0, 0), (1, 4, 4, 1), (3, 2, 4, 0), (2, 5, 14, 4)],
)
def test_phi_pipeline_examples(d, n, phi, n_walls):
    report = phi_pipeline(Surface(d), n)
    assert report.ok
    assert report.phi_pipeline == report.phi_formula == phi
    assert len(report.walls_used) == n_walls
    assert report.base_case_ok and report.induction_ok and report.z_bound_ok


def test_phi_pipeline_wall_for_d1_n4():
    report = phi_pipeline(Surface(1), 4)
    [wall] = report.walls_used
    assert wall.q0 == 3 and wall.destabilizers == (Character(1, 3, 9),)


def test_phi_pipeline_n1_delegates():
    for d in range(1, 12):
        report = phi_pipeline(Surface(d), 1)
        assert report.phi_pipeline == phi1_pipeline(Surface(d)) == report.phi_formula


def test_phi_pipeline_reports_failed_checks(monkeypatch):
    def broken(surface, n):
        raise VerificationError("|Z| bound admits z = 1")

    monkeypatch.setattr(ampleness, "z_length_bound", broken)
    report = phi_pipeline(Surface(2), 3, strict=False)
    assert not report.ok and not report.z_bound_ok and report.phi_pipeline is None
    with pytest.raises(VerificationError):
        phi_pipeline(Surface(2), 3)


def test_phi_report_json():
    data = phi_pipeline(Surface(1), 4).to_json()
    assert data["phi"] == data["phi_pipeline"] == 4
    assert data["walls"][0]["q0"] == "3/1"
    assert data["bounds"] == {"trivial": 15, "terakawa": "13/2", "reider": 3}
    assert data["checks"] == {"z_bound": True, "base_case": True, "induction": True}


@pytest.mark.parametrize("d", range(1, 11))
def test_linear_growth(d):
    s = Surface(d)
    for n in range(2, 10):
        assert phi_formula(s, n + 1) - phi_formula(s, n) == 2 * d
