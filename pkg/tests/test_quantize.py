import math

import numpy as np
import pytest

from daho.errors import DomainError, InconsistencyError, NoBoundStatesError
from daho.heun import HeunParams, polynomial_degree, series_coefficients
from daho.model import dimensionless_scales, energy_from_beta
from daho.quantize import (
    beta_polynomial,
    beta_quadratic_coeffs,
    betabar_roots,
    energy_closed_form_n1,
    frequency_condition,
    magnetic_field_quantized,
    node_count,
    solve_levels,
)

SQRT2 = math.sqrt(2.0)
SQRT6 = math.sqrt(6.0)


def test_frequency_values():
    assert frequency_condition(1, 0, 1.0, 1.0) == pytest.approx(0.5, abs=1e-15)
    assert frequency_condition(1, -1, 1.0, 1.0) == pytest.approx(0.5, abs=1e-15)
    assert frequency_condition(1, 1, 1.0, 1.0) == pytest.approx(12.0 ** (-1.0 / 3.0), abs=1e-15)


def test_frequency_degeneracy_exact():
    base = frequency_condition(1, 0, 1.0, 1.0)
    for l in (-1, -2, -3, -7):
        assert frequency_condition(1, l, 1.0, 1.0) == base  # |l| + l = 0, bitwise equal


def test_frequency_satisfies_termination_line():
    for n in (1, 2, 3, 5):
        for l in (-3, -1, 0, 2, 4):
            for m, Omega in [(1.0, 1.0), (2.5, 0.3), (0.4, 7.0)]:
                omega = frequency_condition(n, l, Omega, m)
                lam, _ = dimensionless_scales(Omega, m, omega, 0.0)
                assert lam * lam / 4.0 - abs(l) - l - 2.0 == pytest.approx(2.0 * n, abs=1e-10)


def test_frequency_domain_errors():
    with pytest.raises(NoBoundStatesError, match="no bound states"):
        frequency_condition(1, 0, 0.0, 1.0)
    with pytest.raises(DomainError):
        frequency_condition(1, 0, -1.0, 1.0)
    with pytest.raises(DomainError):
        frequency_condition(0, 0, 1.0, 1.0)
    with pytest.raises(DomainError):
        frequency_condition(1, 0, 1.0, 0.0)
    # the degree-0 case is reachable only by explicit opt-in
    omega0 = frequency_condition(0, 0, 1.0, 1.0, allow_n0=True)
    assert omega0 == pytest.approx(0.25 ** (1.0 / 3.0), rel=1e-15)


def test_magnetic_field_values():
    assert magnetic_field_quantized(1, 0, 1.0, 1.0, 1.0, 1.0) == pytest.approx(0.5, abs=1e-15)
    assert magnetic_field_quantized(1, 1, 1.0, 1.0, 1.0, 1.0) == pytest.approx(
        12.0 ** (-1.0 / 3.0), abs=1e-15
    )
    assert magnetic_field_quantized(1, 0, 1.0, 1.0, 2.0, 1.0) == pytest.approx(0.25, abs=1e-15)
    with pytest.raises(DomainError):
        magnetic_field_quantized(1, 0, 1.0, 1.0, 0.0, 1.0)


def test_beta_polynomial_shape_and_values():
    poly = beta_polynomial(1, 0, 0.5, 1.0, 1.0)
    assert poly.shape == (3,)
    # proportional to betabar^2 - 8 betabar + 10
    scaled = poly / poly[2]
    assert np.allclose(scaled, [10.0, -8.0, 1.0], rtol=1e-13)


def test_beta_polynomial_rejects_wrong_omega():
    with pytest.raises(InconsistencyError):
        beta_polynomial(1, 0, 0.7, 1.0, 1.0)
    with pytest.raises(InconsistencyError):
        beta_polynomial(2, 0, 0.5, 1.0, 1.0)  # n = 1 frequency fed to n = 2


def test_beta_roots_match_quadratic_closed_form():
    omega = frequency_condition(1, -1, 1.0, 1.0)
    real_bb, complex_bb = betabar_roots(1, -1, omega, 1.0, 1.0)
    assert complex_bb.size == 0
    betas = real_bb * math.sqrt(2.0 * omega)
    assert betas == pytest.approx([6.0 - 2.0 * SQRT2, 6.0 + 2.0 * SQRT2], rel=1e-12)


def test_recurrence_route_equals_quadratic_route_sweep():
    for l in range(-3, 4):
        omega = frequency_condition(1, l, 1.0, 1.0)
        real_bb, _ = betabar_roots(1, l, omega, 1.0, 1.0)
        recurrence = real_bb * math.sqrt(2.0 * omega)
        quadratic = np.sort(
            np.polynomial.Polynomial(beta_quadratic_coeffs(l, omega, 1.0, 1.0)).roots().real
        )
        assert recurrence == pytest.approx(quadratic, rel=1e-12)


def test_roots_all_real_for_probed_family():
    # not guaranteed a priori; measured over the family we expose
    for n in (1, 2, 3, 4, 5, 6):
        for l in (-3, -1, 0, 1, 3):
            omega = frequency_condition(n, l, 1.0, 1.0)
            real_bb, complex_bb = betabar_roots(n, l, omega, 1.0, 1.0)
            assert complex_bb.size == 0
            assert real_bb.size == n + 1
            assert np.all(np.diff(real_bb) > 0)


def test_solve_levels_worked_instance():
    levels = solve_levels(1, 0, 0.0, 1.0, 1.0, 1.0, 1.0)
    assert [lv.branch for lv in levels] == ["-", "+"]
    assert [lv.beta_root for lv in levels] == pytest.approx([4.0 - SQRT6, 4.0 + SQRT6], rel=1e-12)
    assert [lv.energy for lv in levels] == pytest.approx(
        [2.0 - SQRT6 / 2.0, 2.0 + SQRT6 / 2.0], rel=1e-12
    )
    assert [lv.nodes for lv in levels] == [0, 1]
    assert all(lv.omega_nl == 0.5 and lv.B0_nl == 0.5 for lv in levels)


def test_solve_levels_l_minus_one():
    levels = solve_levels(1, -1, 0.0, 1.0, 1.0, 1.0, 1.0)
    assert [lv.energy for lv in levels] == pytest.approx([2.0 - SQRT2, 2.0 + SQRT2], rel=1e-12)


def test_solve_levels_axial_shift():
    base = solve_levels(1, 0, 0.0, 1.0, 1.0, 1.0, 1.0)
    shifted = solve_levels(1, 0, 2.0, 1.0, 1.0, 1.0, 1.0)
    for a, b in zip(shifted, base):
        assert a.energy - b.energy == pytest.approx(2.0, abs=1e-12)  # k^2/(2m)
        assert a.beta_root == b.beta_root


def test_solve_levels_energy_beta_consistency():
    for n in (1, 2, 3):
        for l in (-2, 0, 1):
            for level in solve_levels(n, l, 0.7, 1.3, 1.1, 0.9, 1.7):
                expected = energy_from_beta(level.beta_root, 1.1, 1.3, l, 0.7)
                assert level.energy == pytest.approx(expected, rel=1e-12)


def test_solve_levels_node_ordering():
    for n in (1, 2, 3, 4):
        levels = solve_levels(n, -2, 0.0, 1.0, 1.0, 1.0, 1.0)
        nodes = [lv.nodes for lv in levels]
        assert nodes == sorted(nodes)
        assert all(0 <= v <= n for v in nodes)
        betas = [lv.beta_root for lv in levels]
        assert betas == sorted(betas)


def test_solve_levels_energy_matches_closed_form_sweep():
    for l in range(-3, 4):
        for k in (0.0, 1.0):
            for level in solve_levels(1, l, k, 1.0, 1.0, 1.0, 1.0):
                reference = energy_closed_form_n1(l, k, 1.0, 1.0, level.branch)
                assert level.energy == pytest.approx(reference, rel=1e-10)


def test_rotation_scaling_property():
    base = [lv.energy for lv in solve_levels(1, 0, 0.0, 1.0, 1.0, 1.0, 1.0)]
    for s in (0.5, 2.0, 10.0):
        scaled = [lv.energy for lv in solve_levels(1, 0, 0.0, s, 1.0, 1.0, 1.0)]
        for got, reference in zip(scaled, base):
            assert got == pytest.approx(s ** (1.0 / 3.0) * reference, rel=1e-10)


def test_termination_self_check_over_family():
    for n in (1, 2, 3):
        for l in (-2, 0, 1):
            omega = frequency_condition(n, l, 1.0, 1.0)
            lam, _ = dimensionless_scales(1.0, 1.0, omega, 0.0)
            real_bb, _ = betabar_roots(n, l, omega, 1.0, 1.0)
            for bb in real_bb:
                series = series_coefficients(HeunParams(l, lam, float(bb)), n + 3)
                assert polynomial_degree(series) == n


def test_solve_levels_domain_errors():
    with pytest.raises(NoBoundStatesError, match="no bound states"):
        solve_levels(1, 0, 0.0, 0.0, 1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        solve_levels(0, 0, 0.0, 1.0, 1.0, 1.0, 1.0)
    levels = solve_levels(0, 0, 0.0, 1.0, 1.0, 1.0, 1.0, allow_n0=True)
    assert len(levels) == 1 and levels[0].nodes == 0


def test_node_count_examples():
    assert node_count((1.0, 0.449490)) == 0
    assert node_count((1.0, -4.449490)) == 1
    assert node_count((1.0,)) == 0
    with pytest.raises(DomainError):
        node_count((0.0, 0.0, 0.0))


def test_node_count_accepts_series_and_trims_dust():
    series = series_coefficients(HeunParams(0, 4.0, 4.0 + SQRT6), 6)
    # trailing ~1e-16 entries must not create phantom roots
    assert node_count(series) == 1
    assert node_count((1.0, -3.0, 2.0)) == 2  # roots at 1 and 2
    assert node_count((1.0, 0.0, -4.0)) == 1  # one positive, one negative root


def test_energy_closed_form_branch_guard():
    with pytest.raises(DomainError):
        energy_closed_form_n1(0, 0.0, 1.0, 1.0, "x")
