"""Quasi-exact spectra of the doubly anharmonic (sextic) radial oscillator.

A neutral particle with a field-induced electric dipole moment, placed in
a uniform magnetic field and a radially growing electric field and viewed
from a rotating frame, reduces to a radial Schroedinger problem with an
r^2 + r^4 + r^6 potential. Its series solution is a biconfluent Heun
function; requiring the series to terminate quantizes the cyclotron
frequency (hence the magnetic field) and yields polynomially many exact
levels per mode. This package implements that construction for general
mode degree n and cross-validates every level against an independent
finite-difference eigensolver.

Modules:
    model     parameters, derived scales, potentials
    heun      series recurrence, evaluation, termination, residuals
    quantize  termination conditions, beta roots, node counts, energies
    oracle    finite-difference eigensolver (the independent ground truth)
    validate  cross-validation check suite
    cli       command-line interface (spectrum, bfield, wavefunction, validate)
"""

from .errors import (
    ConfinementError,
    DomainError,
    InconsistencyError,
    NoBoundStatesError,
    NoRealRootsError,
)
from .heun import (
    HeunParams,
    SeriesCoefficients,
    SeriesValue,
    as_polynomial,
    evaluate_H,
    evaluate_R,
    ode_residual,
    polynomial_degree,
    series_coefficients,
)
from .model import (
    DerivedScales,
    PhysicalParams,
    PotentialCoeffs,
    QuantumNumbers,
    beta_from_energy,
    cyclotron_frequency,
    dimensionless_scales,
    doubly_anharmonic,
    effective_mass,
    effective_potential,
    energy_from_beta,
    r_of_x,
    x_of_r,
)
from .oracle import (
    EigSolution,
    RadialGrid,
    default_grid,
    generic_eigensolve,
    radial_eigensolve,
)
from .quantize import (
    QuantizedLevel,
    beta_polynomial,
    beta_quadratic_coeffs,
    betabar_roots,
    energy_closed_form_n1,
    frequency_condition,
    magnetic_field_quantized,
    node_count,
    solve_levels,
)
from .validate import CheckResult, run_checks

__version__ = "0.1.0"
