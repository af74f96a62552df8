"""Independent finite-difference eigensolver for the radial problem.

This is the ground truth against which the quasi-exact (series) levels are
validated, so it shares no machinery with the Heun route: the radial
operator is discretized directly and its low eigenvalues are extracted
with Sturm-sequence bisection plus inverse iteration (LAPACK stebz/stein
via scipy.linalg.eigh_tridiagonal).

In the units of the dimensionless analysis the reduced radial equation
for R(r), with the axial and angular factors removed, reads

    -R'' - R'/r + [ l^2/r^2 + 2 m omega l r^2 + 2 Omega r^4
                    + (m omega)^2 r^6 ] R = 2 beta R,

where beta = 2m(E - Omega l) - k^2. radial_eigensolve assembles exactly
this operator and reports beta (half the raw eigenvalue);
generic_eigensolve exposes the same discretization for an arbitrary
confining sextic potential and reports the raw eigenvalue.

Discretization: the operator -R'' - R'/r = -(1/r)(r R')' is singular at
the axis, so a conservative finite-volume form on cell midpoints
r_i = (i - 1/2) h (h = r_max/(n_pts + 1/2), Dirichlet node exactly at
r_max) is used instead of a pointwise stencil on u = sqrt(r) R. The flux
through the axis vanishes by geometry, which builds in the correct
regularity condition; a similarity transform by sqrt(r_i) then yields a
symmetric tridiagonal matrix with

    diag_i = 2/h^2 + l^2/r_i^2 + V(r_i),
    off_i  = -(i / sqrt(i^2 - 1/4)) / h^2.

This converges at O(h^2) uniformly in l, including the delicate l = 0
channel where the pointwise u = sqrt(r) R stencil (effective potential
term -1/(4r^2)) degrades to logarithmic convergence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConfinementError, DomainError
from .model import PotentialCoeffs, doubly_anharmonic

__all__ = [
    "RadialGrid",
    "EigSolution",
    "default_grid",
    "radial_eigensolve",
    "generic_eigensolve",
]

# Spectrum sizes beyond this are out of scope for the cross-validation.
MAX_LEVELS = 10

# Required margin of the potential wall over the largest computed eigenvalue.
CONFINEMENT_FACTOR = 50.0

# Relative amplitude below which an eigenvector entry is tail noise and is
# skipped when counting sign changes.
NODE_AMPLITUDE_TOL = 1e-8


@dataclass(frozen=True)
class RadialGrid:
    """Uniform radial grid of cell midpoints r_i = (i - 1/2) h, i = 1..n_pts.

    The spacing is h = r_max/(n_pts + 1/2), which places the Dirichlet node
    exactly at r_max.
    """

    r_max: float
    n_pts: int = 8192

    def __post_init__(self):
        if self.r_max <= 0:
            raise DomainError(f"grid cutoff must be positive, got r_max={self.r_max}")
        if self.n_pts < 100:
            raise DomainError(f"grid needs at least 100 points, got n_pts={self.n_pts}")

    @property
    def h(self) -> float:
        return self.r_max / (self.n_pts + 0.5)

    @property
    def nodes(self) -> np.ndarray:
        return (np.arange(1, self.n_pts + 1) - 0.5) * self.h

    def doubled(self) -> "RadialGrid":
        return RadialGrid(self.r_max, 2 * self.n_pts)


@dataclass(frozen=True)
class EigSolution:
    """Low radial spectrum: ascending eigenvalues, radial functions, node counts.

    vectors[:, j] samples the j-th radial function R_j on grid.nodes,
    normalized to sum(R^2 r) h = 1 with the first significant entry positive.
    """

    betas: np.ndarray
    vectors: np.ndarray
    node_counts: tuple[int, ...]
    grid: RadialGrid


def default_grid(m: float, omega: float, n_pts: int = 8192) -> RadialGrid:
    """Default cutoff 10/(m omega)^{1/4} clamped to [6, 20]; the sextic wall
    makes a modest r_max sufficient."""
    if m * omega <= 0:
        raise DomainError(f"m*omega must be positive, got m={m}, omega={omega}")
    r_max = min(max(10.0 / (m * omega) ** 0.25, 6.0), 20.0)
    return RadialGrid(r_max=r_max, n_pts=n_pts)


def _count_sign_changes(vector: np.ndarray) -> int:
    """Sign changes of an eigenvector, ignoring entries below the noise floor."""
    magnitude = np.abs(vector)
    significant = vector[magnitude > NODE_AMPLITUDE_TOL * magnitude.max()]
    return int(np.sum(np.signbit(significant[:-1]) != np.signbit(significant[1:])))


def _suggest_r_max(coeffs: PotentialCoeffs, target: float) -> float:
    """Smallest r with V(r) >= target, from the cubic in s = r^2, padded 10%."""
    c = np.array([-target, coeffs.varpi, coeffs.quartic_coeff, coeffs.eta])
    roots = np.polynomial.Polynomial(c).roots()
    real = roots[np.abs(roots.imag) <= 1e-9 * np.maximum(1.0, np.abs(roots))].real
    s = max(float(v) for v in real if v > 0)
    return 1.1 * s ** 0.5


def _solve_once(coeffs: PotentialCoeffs, l: int, grid: RadialGrid, M: int):
    """One tridiagonal eigensolve; returns (eigenvalues, R samples)."""
    h = grid.h
    r = grid.nodes
    i = np.arange(1, grid.n_pts, dtype=float)
    diag = 2.0 / h ** 2 + (l * l) / r ** 2 + doubly_anharmonic(r, coeffs)
    off = -(i / np.sqrt(i * i - 0.25)) / h ** 2
    eigenvalues, similarity_vectors = eigh_tridiagonal(
        diag, off, select="i", select_range=(0, M - 1)
    )
    # Undo the sqrt(r) similarity transform and normalize.
    R = similarity_vectors / np.sqrt(r)[:, None]
    R /= np.sqrt(np.sum(R * R * r[:, None], axis=0) * h)
    for j in range(R.shape[1]):
        lead = R[np.abs(R[:, j]) > NODE_AMPLITUDE_TOL * np.abs(R[:, j]).max(), j]
        if lead.size and lead[0] < 0:
            R[:, j] = -R[:, j]
    return eigenvalues, R


def generic_eigensolve(
    coeffs: PotentialCoeffs, l: int, grid: RadialGrid, M: int, refine: bool = True
) -> EigSolution:
    """Lowest M eigenvalues of -R'' - R'/r + [l^2/r^2 + V(r)] R = w R.

    With refine set, eigenvalues are Richardson-extrapolated from the grid
    and its doubled-resolution copy (the h^2 error terms cancel); vectors
    and node counts come from the finer grid. The potential wall must clear
    the largest computed eigenvalue by a factor of 50, otherwise a
    ConfinementError with a suggested r_max is raised.
    """
    if not isinstance(coeffs, PotentialCoeffs):
        coeffs = PotentialCoeffs(*coeffs)
    if not 1 <= M <= MAX_LEVELS:
        raise DomainError(f"number of levels must be in 1..{MAX_LEVELS}, got M={M}")
    if M >= grid.n_pts:
        raise DomainError(f"grid too small for M={M} levels")
    eigenvalues, R = _solve_once(coeffs, l, grid, M)
    fine_grid = grid
    if refine:
        fine_grid = grid.doubled()
        fine_eigenvalues, R = _solve_once(coeffs, l, fine_grid, M)
        h1, h2 = grid.h, fine_grid.h
        eigenvalues = fine_eigenvalues + (fine_eigenvalues - eigenvalues) * h2 ** 2 / (
            h1 ** 2 - h2 ** 2
        )
    wall = float(doubly_anharmonic(grid.r_max, coeffs))
    top = float(eigenvalues[-1])
    if wall < CONFINEMENT_FACTOR * top:
        suggestion = _suggest_r_max(coeffs, CONFINEMENT_FACTOR * top)
        raise ConfinementError(
            f"potential wall V(r_max={grid.r_max:g}) = {wall:.6g} is below "
            f"{CONFINEMENT_FACTOR:g} x the largest eigenvalue {top:.6g}; "
            f"suggest r_max >= {suggestion:.2f}",
            suggested_r_max=suggestion,
        )
    node_counts = tuple(_count_sign_changes(R[:, j]) for j in range(M))
    return EigSolution(
        betas=eigenvalues, vectors=R, node_counts=node_counts, grid=fine_grid
    )


def radial_eigensolve(
    m: float,
    omega: float,
    Omega: float,
    l: int,
    grid: RadialGrid | None = None,
    M: int = 2,
    refine: bool = True,
) -> EigSolution:
    """Lowest M spectral parameters beta for the physical radial problem.

    Maps (m, omega, Omega, l) onto the generic operator with coefficients
    (2 m omega l, 2 Omega, (m omega)^2) and halves its eigenvalues, per the
    reduced radial equation in the module docstring. omega is supplied
    directly, so Omega = 0 (pure r^2 + r^6 potential) is solvable here even
    though quantization rejects it.
    """
    if m <= 0 or omega <= 0:
        raise DomainError(f"m and omega must be positive, got m={m}, omega={omega}")
    if Omega < 0:
        raise DomainError(f"rotation rate must be nonnegative, got Omega={Omega}")
    coeffs = PotentialCoeffs(
        varpi=2.0 * m * omega * l, quartic_coeff=2.0 * Omega, eta=(m * omega) ** 2
    )
    if grid is None:
        grid = default_grid(m, omega)
    solution = generic_eigensolve(coeffs, l, grid, M, refine=refine)
    return EigSolution(
        betas=solution.betas / 2.0,
        vectors=solution.vectors,
        node_counts=solution.node_counts,
        grid=solution.grid,
    )
