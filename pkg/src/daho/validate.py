"""Cross-validation suite binding the quasi-exact route to the eigensolver.

Each check compares two independent routes to the same number: closed
forms against the generic recurrence machinery, and series-termination
levels against the finite-difference spectrum. The grid parameters are
configurable so that degraded settings visibly fail.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoBoundStatesError
from .heun import HeunParams, as_polynomial, ode_residual, series_coefficients
from .model import PotentialCoeffs, dimensionless_scales
from .oracle import RadialGrid, default_grid, generic_eigensolve, radial_eigensolve
from .quantize import (
    beta_quadratic_coeffs,
    betabar_roots,
    energy_closed_form_n1,
    frequency_condition,
    magnetic_field_quantized,
    node_count,
    solve_levels,
)

__all__ = ["CheckResult", "run_checks", "CHECK_NAMES"]

SQRT2 = math.sqrt(2.0)
SQRT6 = math.sqrt(6.0)


@dataclass(frozen=True)
class CheckResult:
    """One validation check: discrepancy, tolerance, verdict, wall time."""

    name: str
    measured: float
    tolerance: float
    passed: bool
    seconds: float
    note: str = ""


def _check_frequency():
    """Quantized frequencies against their closed forms at n = 1."""
    w_l0 = frequency_condition(1, 0, 1.0, 1.0)
    w_l1 = frequency_condition(1, 1, 1.0, 1.0)
    measured = max(abs(w_l0 - 0.5), abs(w_l1 - 12.0 ** (-1.0 / 3.0)))
    return measured, 1e-12, None, ""


def _check_bfield():
    """B0 = (m/(alpha mu)) omega over l in -3..3, plus exact l <= 0 degeneracy."""
    worst = 0.0
    base = magnetic_field_quantized(1, 0, 1.0, 1.0, 1.0, 1.0)
    for l in range(-3, 4):
        w = frequency_condition(1, l, 1.0, 1.0)
        b = magnetic_field_quantized(1, l, 1.0, 1.0, 1.0, 1.0)
        worst = max(worst, abs(b - w))
        if l <= 0:
            worst = max(worst, abs(b - base))
    worst = max(worst, abs(magnetic_field_quantized(1, 0, 1.0, 1.0, 2.0, 1.0) - base / 2.0))
    return worst, 1e-12, None, ""


def _check_beta_routes():
    """Recurrence-built termination roots against the explicit n = 1 quadratic."""
    worst = 0.0
    for l in range(-3, 4):
        w = frequency_condition(1, l, 1.0, 1.0)
        real_bb, _ = betabar_roots(1, l, w, 1.0, 1.0)
        recurrence = real_bb * math.sqrt(2.0 * w)
        quadratic = np.sort(np.polynomial.Polynomial(beta_quadratic_coeffs(l, w, 1.0, 1.0)).roots().real)
        worst = max(worst, float(np.max(np.abs(recurrence - quadratic) / np.abs(quadratic))))
    return worst, 1e-12, None, ""


def _check_energies():
    """solve_levels energies against the explicit n = 1 formula and worked values."""
    worst = 0.0
    for l in range(-3, 4):
        for k in (0.0, 1.0):
            for level in solve_levels(1, l, k, 1.0, 1.0, 1.0, 1.0):
                reference = energy_closed_form_n1(l, k, 1.0, 1.0, level.branch)
                worst = max(worst, abs(level.energy - reference) / abs(reference))
    worked = {
        (0, "-"): 2.0 - SQRT6 / 2.0,
        (0, "+"): 2.0 + SQRT6 / 2.0,
        (-1, "-"): 2.0 - SQRT2,
        (-1, "+"): 2.0 + SQRT2,
    }
    for (l, branch), expected in worked.items():
        level = {lv.branch: lv for lv in solve_levels(1, l, 0.0, 1.0, 1.0, 1.0, 1.0)}[branch]
        worst = max(worst, abs(level.energy - expected) / abs(expected))
    return worst, 1e-10, None, ""


def _check_oracle_n1(n_pts, r_max, refine):
    """Finite-difference betas against {4 - sqrt6, 4 + sqrt6} at indices {0, 1}."""
    omega = frequency_condition(1, 0, 1.0, 1.0)
    grid = RadialGrid(r_max, n_pts) if r_max else default_grid(1.0, omega, n_pts)
    solution = radial_eigensolve(1.0, omega, 1.0, 0, grid=grid, M=2, refine=refine)
    target = np.array([4.0 - SQRT6, 4.0 + SQRT6])
    measured = float(np.max(np.abs(solution.betas - target) / target))
    passed = measured <= 1e-4
    note = ""
    if solution.node_counts != (0, 1):
        passed = False
        note = f"node counts {solution.node_counts} != (0, 1)"
    return measured, 1e-4, passed, note


def _check_residual():
    """ODE residual of the n = 1 terminating polynomial on x in [0.01, 5]."""
    params = HeunParams(l=0, lambda_dim=4.0, betabar=4.0 - SQRT6)
    poly = as_polynomial(series_coefficients(params, 6))
    measured = ode_residual(poly, params, np.linspace(0.01, 5.0, 500))
    return measured, 1e-10, None, ""


def _check_harmonic(n_pts, refine):
    """Pure-quadratic calibration: betas {2, 6, 10} of the 2D radial oscillator."""
    grid = RadialGrid(24.0, n_pts)
    solution = generic_eigensolve(PotentialCoeffs(1.0, 0.0, 0.0), 0, grid, M=3, refine=refine)
    target = np.array([2.0, 6.0, 10.0])
    return float(np.max(np.abs(solution.betas - target) / target)), 1e-6, None, ""


def _check_order():
    """Observed eigenvalue convergence order, expected h^2 within a factor 2."""
    values, spacings = [], []
    for n_pts in (1000, 2000, 4000):
        grid = RadialGrid(24.0, n_pts)
        solution = generic_eigensolve(PotentialCoeffs(1.0, 0.0, 0.0), 0, grid, M=1, refine=False)
        values.append(float(solution.betas[0]))
        spacings.append(grid.h)
    order = math.log((values[0] - values[1]) / (values[1] - values[2])) / math.log(
        spacings[0] / spacings[1]
    )
    measured = abs(math.log2(order / 2.0))
    return measured, 1.0, None, f"observed order {order:.3f}"


def _check_scaling():
    """E(s Omega) = s^(1/3) E(Omega) at (n=1, l=0, k=0)."""
    base = [lv.energy for lv in solve_levels(1, 0, 0.0, 1.0, 1.0, 1.0, 1.0)]
    worst = 0.0
    for s in (0.5, 2.0, 10.0):
        scaled = [lv.energy for lv in solve_levels(1, 0, 0.0, s, 1.0, 1.0, 1.0)]
        for got, reference in zip(scaled, base):
            expected = s ** (1.0 / 3.0) * reference
            worst = max(worst, abs(got - expected) / abs(expected))
    return worst, 1e-10, None, ""


def _check_n2(n_pts, r_max, refine):
    """The three n = 2 termination roots against the eigensolver spectrum,
    each at the index given by its polynomial node count."""
    omega = frequency_condition(2, 0, 1.0, 1.0)
    real_bb, complex_bb = betabar_roots(2, 0, omega, 1.0, 1.0)
    lambda_dim, _ = dimensionless_scales(1.0, 1.0, omega, 0.0)
    nodes = []
    for bb in real_bb:
        poly = as_polynomial(series_coefficients(HeunParams(0, lambda_dim, float(bb)), 5))
        nodes.append(node_count(poly))
    betas = real_bb * math.sqrt(2.0 * omega)
    grid = RadialGrid(r_max, n_pts) if r_max else default_grid(1.0, omega, n_pts)
    solution = radial_eigensolve(1.0, omega, 1.0, 0, grid=grid, M=3, refine=refine)
    measured = float(
        max(abs(b - solution.betas[j]) / abs(solution.betas[j]) for b, j in zip(betas, nodes))
    )
    passed = measured <= 1e-4
    note = ""
    if len(real_bb) != 3 or complex_bb.size:
        passed = False
        note = f"expected 3 real roots, got {len(real_bb)} real / {complex_bb.size} complex"
    elif nodes != [0, 1, 2]:
        passed = False
        note = f"polynomial node counts {nodes} != [0, 1, 2]"
    return measured, 1e-4, passed, note


def _check_omega_zero():
    """Quantization must refuse Omega = 0; the eigensolver must still run."""
    failures = []
    try:
        frequency_condition(1, 0, 0.0, 1.0)
        failures.append("quantization accepted Omega = 0")
    except NoBoundStatesError as exc:
        if "no bound states" not in str(exc):
            failures.append("error text does not say 'no bound states'")
    solution = radial_eigensolve(
        1.0, 0.5, 0.0, 1, grid=RadialGrid(8.0, 2048), M=2, refine=False
    )
    if not np.all(np.diff(solution.betas) > 0) or solution.node_counts != (0, 1):
        failures.append("Omega = 0 eigensolve is malformed")
    ok = not failures
    return (0.0 if ok else 1.0), 0.0, ok, "; ".join(failures)


CHECK_NAMES = (
    "frequency_closed_form",
    "bfield_sweep",
    "beta_recurrence_vs_quadratic",
    "energy_closed_form",
    "oracle_cross_validation",
    "heun_polynomial_residual",
    "harmonic_calibration",
    "convergence_order",
    "rotation_scaling",
    "n2_oracle_agreement",
    "omega_zero_guard",
)


def run_checks(n_pts: int = 8192, r_max: float | None = None, refine: bool = True, only=None):
    """Run the suite (or the subset named in ``only``) and time each check."""
    suite = {
        "frequency_closed_form": _check_frequency,
        "bfield_sweep": _check_bfield,
        "beta_recurrence_vs_quadratic": _check_beta_routes,
        "energy_closed_form": _check_energies,
        "oracle_cross_validation": lambda: _check_oracle_n1(n_pts, r_max, refine),
        "heun_polynomial_residual": _check_residual,
        "harmonic_calibration": lambda: _check_harmonic(n_pts, refine),
        "convergence_order": _check_order,
        "rotation_scaling": _check_scaling,
        "n2_oracle_agreement": lambda: _check_n2(n_pts, r_max, refine),
        "omega_zero_guard": _check_omega_zero,
    }
    if only:
        unknown = sorted(set(only) - set(suite))
        if unknown:
            raise DomainError(
                f"unknown checks {unknown}; available: {', '.join(CHECK_NAMES)}"
            )
        names = [name for name in CHECK_NAMES if name in set(only)]
    else:
        names = list(CHECK_NAMES)
    results = []
    for name in names:
        start = time.perf_counter()
        measured, tolerance, passed, note = suite[name]()
        elapsed = time.perf_counter() - start
        if passed is None:
            passed = measured <= tolerance
        results.append(
            CheckResult(
                name=name,
                measured=float(measured),
                tolerance=float(tolerance),
                passed=bool(passed),
                seconds=elapsed,
                note=note,
            )
        )
    return results
