"""End-to-end acceptance suite.

Each test exercises one advertised guarantee of the package at its stated
tolerance and prints a single PASS/FAIL line (run with -s to see them all).
The checks call the library directly rather than going through the
self-validation command, so the two report paths stay independent.
"""

import math
import time

import numpy as np
import pytest

from daho.errors import NoBoundStatesError
from daho.heun import HeunParams, as_polynomial, ode_residual, series_coefficients
from daho.model import PotentialCoeffs
from daho.oracle import RadialGrid, generic_eigensolve, radial_eigensolve
from daho.quantize import (
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


def _report(num: int, name: str, measured: float, tolerance: float, ok: bool, note: str = ""):
    verdict = "PASS" if ok else "FAIL"
    suffix = f"; {note}" if note else ""
    print(
        f"[criterion {num:02d}] {name}: {verdict} "
        f"(measured {measured:.3e}, tolerance {tolerance:.1e}{suffix})"
    )
    assert ok, f"criterion {num:02d} {name}: measured {measured:.3e} vs tolerance {tolerance:.1e}{suffix}"


def _rel(err, reference):
    return abs(err - reference) / abs(reference)


def test_criterion_01_frequency_quantization():
    measured = max(
        abs(frequency_condition(1, 0, 1.0, 1.0) - 0.5),
        abs(frequency_condition(1, 1, 1.0, 1.0) - 12.0 ** (-1.0 / 3.0)),
    )
    _report(1, "frequency quantization", measured, 1e-12, measured <= 1e-12)


def test_criterion_02_field_quantization():
    measured = 0.0
    for l in range(-3, 4):
        expected = (1.0 / (2.0 * (abs(l) + l + 4))) ** (1.0 / 3.0)
        measured = max(measured, abs(magnetic_field_quantized(1, l, 1.0, 1.0, 1.0, 1.0) - expected))
    base = magnetic_field_quantized(1, 0, 1.0, 1.0, 1.0, 1.0)
    degenerate = all(
        magnetic_field_quantized(1, l, 1.0, 1.0, 1.0, 1.0) == base for l in (-3, -2, -1)
    )
    ok = measured <= 1e-12 and degenerate
    _report(2, "field quantization", measured, 1e-12, ok, note=f"l<=0 degeneracy exact: {degenerate}")


def test_criterion_03_beta_recurrence_vs_quadratic():
    measured = 0.0
    for l in range(-3, 4):
        omega = frequency_condition(1, l, 1.0, 1.0)
        real_bb, _ = betabar_roots(1, l, omega, 1.0, 1.0)
        recurrence = real_bb * math.sqrt(2.0 * omega)
        roots = np.polynomial.Polynomial(beta_quadratic_coeffs(l, omega, 1.0, 1.0)).roots()
        quadratic = np.sort(roots.real)
        assert np.max(np.abs(roots.imag)) < 1e-12
        measured = max(measured, float(np.max(np.abs(recurrence - quadratic) / np.abs(quadratic))))
    _report(3, "beta roots: recurrence vs explicit quadratic", measured, 1e-12, measured <= 1e-12)


def test_criterion_04_energy_closed_form():
    measured = 0.0
    for l in range(-3, 4):
        for k in (0.0, 1.0):
            for level in solve_levels(1, l, k, 1.0, 1.0, 1.0, 1.0):
                measured = max(measured, _rel(level.energy, energy_closed_form_n1(l, k, 1.0, 1.0, level.branch)))
    worked = [
        (0, [2.0 - SQRT6 / 2.0, 2.0 + SQRT6 / 2.0]),
        (-1, [2.0 - SQRT2, 2.0 + SQRT2]),
    ]
    for l, targets in worked:
        energies = [level.energy for level in solve_levels(1, l, 0.0, 1.0, 1.0, 1.0, 1.0)]
        for got, ref in zip(energies, targets):
            measured = max(measured, _rel(got, ref))
    _report(4, "energies vs closed form and worked values", measured, 1e-10, measured <= 1e-10)


def test_criterion_05_oracle_cross_validation():
    start = time.perf_counter()
    solution = radial_eigensolve(1.0, 0.5, 1.0, 0, M=2)  # default grid
    elapsed = time.perf_counter() - start
    targets = [4.0 - SQRT6, 4.0 + SQRT6]
    measured = max(_rel(float(b), t) for b, t in zip(solution.betas, targets))
    nodes_ok = solution.node_counts == (0, 1)
    ok = measured <= 1e-4 and nodes_ok and elapsed <= 10.0
    _report(
        5,
        "finite-difference cross-validation of beta",
        measured,
        1e-4,
        ok,
        note=f"nodes {solution.node_counts}, {elapsed:.2f} s",
    )


def test_criterion_06_heun_polynomial_residual():
    omega = frequency_condition(1, 0, 1.0, 1.0)
    real_bb, _ = betabar_roots(1, 0, omega, 1.0, 1.0)
    grid = np.linspace(0.01, 5.0, 500)
    measured = 0.0
    for bb in real_bb:
        params = HeunParams(l=0, lambda_dim=4.0, betabar=float(bb))
        poly = as_polynomial(series_coefficients(params, N=4))
        assert poly is not None
        measured = max(measured, ode_residual(poly, params, grid))
    _report(6, "ODE residual of the degree-1 polynomial solutions", measured, 1e-10, measured <= 1e-10)


def test_criterion_07_oracle_calibration_and_order():
    harmonic = PotentialCoeffs(1.0, 0.0, 0.0)
    solution = generic_eigensolve(harmonic, 0, RadialGrid(24.0, 8192), M=3)
    measured = max(_rel(float(b), t) for b, t in zip(solution.betas, [2.0, 6.0, 10.0]))
    errors, spacings = [], []
    for n_pts in (1000, 2000, 4000):
        grid = RadialGrid(12.0, n_pts)
        coarse = generic_eigensolve(harmonic, 0, grid, M=1, refine=False)
        errors.append(abs(float(coarse.betas[0]) - 2.0))
        spacings.append(grid.h)
    order = math.log(errors[0] / errors[2]) / math.log(spacings[0] / spacings[2])
    order_ok = 1.0 <= order <= 4.0  # h^2 within a factor 2 on the exponent scale
    ok = measured <= 1e-6 and order_ok
    _report(
        7,
        "harmonic calibration and convergence order",
        measured,
        1e-6,
        ok,
        note=f"observed order {order:.3f}",
    )


def test_criterion_08_rotation_scaling():
    base = [level.energy for level in solve_levels(1, 0, 0.0, 1.0, 1.0, 1.0, 1.0)]
    measured = 0.0
    for s in (0.5, 2.0, 10.0):
        scaled = [level.energy for level in solve_levels(1, 0, 0.0, s, 1.0, 1.0, 1.0)]
        for got, ref in zip(scaled, base):
            measured = max(measured, _rel(got, s ** (1.0 / 3.0) * ref))
    _report(8, "rotation scaling E(s*Omega) = s^(1/3) E(Omega)", measured, 1e-10, measured <= 1e-10)


def test_criterion_09_n2_extension_vs_oracle():
    omega = frequency_condition(2, 0, 1.0, 1.0)
    real_bb, complex_bb = betabar_roots(2, 0, omega, 1.0, 1.0)
    three_real = real_bb.size == 3 and complex_bb.size == 0
    lambda_dim = (1.0 / omega) * math.sqrt(2.0 / omega)
    betas, nodes = [], []
    for bb in real_bb:
        poly = as_polynomial(series_coefficients(HeunParams(0, lambda_dim, float(bb)), N=5))
        assert poly is not None and poly.N == 2
        betas.append(float(bb) * math.sqrt(2.0 * omega))
        nodes.append(node_count(poly.f))
    oracle = radial_eigensolve(1.0, omega, 1.0, 0, M=3)  # default grid
    measured = max(_rel(beta, float(oracle.betas[j])) for beta, j in zip(betas, nodes))
    ok = three_real and sorted(nodes) == [0, 1, 2] and measured <= 1e-4
    _report(
        9,
        "degree-2 termination roots vs oracle at node index",
        measured,
        1e-4,
        ok,
        note=f"roots real: {three_real}, node counts {nodes}",
    )


def test_criterion_10_omega_zero_behavior():
    quantize_refuses = False
    try:
        frequency_condition(1, 0, 0.0, 1.0)
    except NoBoundStatesError as exc:
        quantize_refuses = "no bound states" in str(exc)
    with pytest.raises(NoBoundStatesError):
        solve_levels(1, 0, 0.0, 0.0, 1.0, 1.0, 1.0)
    solution = radial_eigensolve(
        1.0, 0.5, 0.0, 1, grid=RadialGrid(8.0, 2048), M=2, refine=False
    )
    oracle_solves = bool(np.all(np.diff(solution.betas) > 0)) and solution.node_counts == (0, 1)
    ok = quantize_refuses and oracle_solves
    _report(
        10,
        "Omega = 0: quantization refuses, oracle still solves",
        0.0 if ok else 1.0,
        0.0,
        ok,
        note=f"error text check {quantize_refuses}, oracle check {oracle_solves}",
    )
