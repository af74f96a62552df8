"""Quantization by series termination: frequencies, fields, beta roots, energies.

The radial series solution terminates at degree n exactly when

    (i)  lambda^2/4 - |l| - l - 2 = 2n,
    (ii) f_{n+1}(betabar) = 0.

Condition (i) fixes the cyclotron frequency,

    omega_{n,l}^3 = Omega^2 / (2 m^3 (2n + |l| + l + 2)),

and with it a discrete set of magnetic fields B0 = (m / (alpha mu)) omega.
Condition (ii) is a degree-(n+1) polynomial equation in betabar whose real
roots give the quasi-exact spectral parameters beta = betabar sqrt(2 m omega)
and energies E = beta/(2m) + Omega l + k^2/(2m).

Both conditions are implemented for general n by carrying the recurrence
coefficients as exact polynomials in betabar. The closed forms available
at n = 1 (explicit quadratic in beta and explicit energies) are kept as
independent cross-checks, not as the implementation.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError, InconsistencyError, NoBoundStatesError, NoRealRootsError
from .heun import HeunParams, as_polynomial, polynomial_degree, series_coefficients
from .model import dimensionless_scales, energy_from_beta

__all__ = [
    "QuantizedLevel",
    "frequency_condition",
    "magnetic_field_quantized",
    "beta_polynomial",
    "betabar_roots",
    "solve_levels",
    "node_count",
    "beta_quadratic_coeffs",
    "energy_closed_form_n1",
]

# Tolerance on the first termination condition when checking a supplied omega.
CONDITION_TOL = 1e-10

# Relative imaginary part below which a polynomial root counts as real.
REAL_ROOT_TOL = 1e-9


@dataclass(frozen=True)
class QuantizedLevel:
    """One quasi-exact level: quantum numbers, scales, beta root, nodes, energy.

    branch is "-" / "+" for n = 1 (smaller / larger root) and the ascending
    root index ("0", "1", ...) for other n. nodes counts the strictly
    positive zeros of the degree-n series polynomial, which is also the
    level's index in the eigensolver spectrum.
    """

    n: int
    l: int
    k: float
    omega_nl: float
    B0_nl: float
    beta_root: float
    branch: str
    nodes: int
    energy: float


def _check_mode_number(n: int, allow_n0: bool) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    floor = 0 if allow_n0 else 1
    if n < floor:
        raise DomainError(
            f"radial mode index must satisfy n >= {floor}, got n={n}"
            + ("" if allow_n0 else " (pass allow_n0=True to explore the degree-0 case)")
        )


def _check_rotation(Omega: float) -> None:
    if Omega == 0:
        raise NoBoundStatesError(
            "no bound states: at Omega = 0 the effects of rotation vanish, the "
            "quartic confinement term drops out, and the series cannot terminate"
        )
    if Omega < 0:
        raise DomainError(f"rotation rate must be positive for quantization, got Omega={Omega}")


def frequency_condition(n: int, l: int, Omega: float, m: float, *, allow_n0: bool = False) -> float:
    """Quantized cyclotron frequency omega with omega^3 = Omega^2 / (2 m^3 (2n + |l| + l + 2)).

    For n = 1 this is omega^3 = Omega^2 / (2 m^3 (|l| + l + 4)).
    """
    _check_mode_number(n, allow_n0)
    _check_rotation(Omega)
    if m <= 0:
        raise DomainError(f"effective mass must be positive, got m={m}")
    S = 2 * n + abs(l) + l + 2
    omega = (Omega * Omega / (2.0 * m ** 3 * S)) ** (1.0 / 3.0)
    # Self-check: the dimensionless coupling built from this omega must sit
    # on the degree-n termination line.
    lambda_dim, _ = dimensionless_scales(Omega, m, omega, 0.0)
    defect = lambda_dim * lambda_dim / 4.0 - abs(l) - l - 2.0 - 2.0 * n
    if abs(defect) > CONDITION_TOL:
        raise InconsistencyError(
            f"frequency self-check failed at (n={n}, l={l}): termination defect {defect:.3e}"
        )
    return omega


def magnetic_field_quantized(
    n: int, l: int, Omega: float, m: float, alpha: float, mu: float, *, allow_n0: bool = False
) -> float:
    """Discrete magnetic field B0 = (m / (alpha mu)) * omega_{n,l}."""
    if alpha * mu <= 0:
        raise DomainError(f"alpha*mu must be positive, got alpha={alpha}, mu={mu}")
    return (m / (alpha * mu)) * frequency_condition(n, l, Omega, m, allow_n0=allow_n0)


def beta_polynomial(
    n: int, l: int, omega_nl: float, Omega: float, m: float, *, allow_n0: bool = False
) -> np.ndarray:
    """Ascending coefficients of f_{n+1} as a polynomial in betabar.

    The recurrence is propagated with each f_k carried as an exact
    polynomial of degree k in betabar. The supplied omega must satisfy the
    first termination condition; physical beta values are the real roots
    rescaled by sqrt(2 m omega).
    """
    _check_mode_number(n, allow_n0)
    _check_rotation(Omega)
    lambda_dim, _ = dimensionless_scales(Omega, m, omega_nl, 0.0)
    al = abs(l)
    A = lambda_dim * lambda_dim / 4.0 - al - l - 2.0
    if abs(A - 2.0 * n) > CONDITION_TOL:
        raise InconsistencyError(
            f"omega={omega_nl} does not satisfy the degree-{n} termination condition "
            f"at l={l}: lambda^2/4 - |l| - l - 2 = {A:.12g}, expected {2 * n}"
        )
    # f[k] holds the ascending coefficients of f_k(betabar), degree k.
    f = [np.array([1.0]), np.array([lambda_dim / 2.0, -1.0 / (1.0 + al)])]
    for k in range(n):
        upper = f[k + 1]
        lower = f[k]
        num = np.zeros(k + 3)
        num[: k + 2] += lambda_dim * (2 * k + al + 3) * upper
        num[1 : k + 3] -= 2.0 * upper  # the -2 betabar * f_{k+1} term
        num[: k + 1] -= 2.0 * (A - 2.0 * k) * lower
        f.append(num / (2.0 * (k + 2) * (k + 2 + al)))
    return f[n + 1]


def _refine_real_root(c: np.ndarray, x0: float) -> float:
    """Newton refinement of a real polynomial root from a companion-matrix seed."""
    dc = npoly.polyder(c)
    x = x0
    for _ in range(60):
        derivative = npoly.polyval(x, dc)
        if derivative == 0.0:
            break
        step = npoly.polyval(x, c) / derivative
        x -= step
        if abs(step) <= 1e-14 * max(1.0, abs(x)):
            break
    return float(x)


def betabar_roots(
    n: int, l: int, omega_nl: float, Omega: float, m: float, *, allow_n0: bool = False
) -> tuple[np.ndarray, np.ndarray]:
    """(real roots ascending, complex roots) of f_{n+1}(betabar) = 0.

    Real roots come from companion-matrix eigenvalues refined by Newton
    iteration; roots with relative imaginary part above 1e-9 are returned
    separately rather than dropped.
    """
    c = beta_polynomial(n, l, omega_nl, Omega, m, allow_n0=allow_n0)
    roots = np.polynomial.Polynomial(c).roots()
    scale = np.maximum(1.0, np.abs(roots))
    is_real = np.abs(roots.imag) <= REAL_ROOT_TOL * scale
    real = np.sort([_refine_real_root(c, r) for r in roots[is_real].real])
    return np.asarray(real, dtype=float), roots[~is_real]


def solve_levels(
    n: int,
    l: int,
    k: float,
    Omega: float,
    m: float,
    alpha: float,
    mu: float,
    *,
    allow_n0: bool = False,
) -> list[QuantizedLevel]:
    """All quasi-exact levels at (n, l, k): one per real root of f_{n+1}.

    Levels are ordered by ascending beta root. Complex roots are reported
    through a warning, never silently dropped; an empty real-root set
    raises NoRealRootsError.
    """
    omega = frequency_condition(n, l, Omega, m, allow_n0=allow_n0)
    B0 = magnetic_field_quantized(n, l, Omega, m, alpha, mu, allow_n0=allow_n0)
    real_bb, complex_bb = betabar_roots(n, l, omega, Omega, m, allow_n0=allow_n0)
    if complex_bb.size:
        warnings.warn(
            f"(n={n}, l={l}): discarding non-real termination roots betabar={complex_bb}",
            stacklevel=2,
        )
    if real_bb.size == 0:
        raise NoRealRootsError(f"no real termination roots at (n={n}, l={l})")
    lambda_dim, _ = dimensionless_scales(Omega, m, omega, 0.0)
    sqrt_2mw = math.sqrt(2.0 * m * omega)
    levels = []
    for j, bb in enumerate(real_bb):
        params = HeunParams(l=l, lambda_dim=lambda_dim, betabar=float(bb))
        series = series_coefficients(params, N=n + 3)
        poly = as_polynomial(series)
        if poly is None or poly.N != n:
            found = polynomial_degree(series)
            raise InconsistencyError(
                f"termination self-check failed at (n={n}, l={l}, root {j}): "
                f"series does not terminate at degree {n} (detected {found})"
            )
        beta = float(bb) * sqrt_2mw
        branch = ("-", "+")[j] if n == 1 else str(j)
        levels.append(
            QuantizedLevel(
                n=n,
                l=l,
                k=k,
                omega_nl=omega,
                B0_nl=B0,
                beta_root=beta,
                branch=branch,
                nodes=node_count(poly.f),
                energy=energy_from_beta(beta, m, Omega, l, k),
            )
        )
    return levels


def node_count(coeffs) -> int:
    """Number of strictly positive real roots of a polynomial, without multiplicity.

    Accepts a SeriesCoefficients or a plain ascending coefficient sequence.
    Trailing coefficients below 1e-12 of the largest are treated as zero, so
    terminating series can be passed without manual trimming.
    """
    f = getattr(coeffs, "f", coeffs)
    c = np.asarray([float(v) for v in f])
    if c.size == 0 or not np.any(c != 0.0):
        raise DomainError("node count of an identically zero polynomial is undefined")
    degree = int(np.nonzero(np.abs(c) > 1e-12 * np.max(np.abs(c)))[0][-1])
    if degree == 0:
        return 0
    roots = np.polynomial.Polynomial(c[: degree + 1]).roots()
    scale = np.maximum(1.0, np.abs(roots))
    real = np.sort(roots[np.abs(roots.imag) <= REAL_ROOT_TOL * scale].real)
    positive = real[real > 0.0]
    if positive.size == 0:
        return 0
    distinct = 1 + int(np.sum(np.diff(positive) > 1e-9 * np.maximum(1.0, positive[1:])))
    return distinct


def beta_quadratic_coeffs(l: int, omega: float, Omega: float, m: float) -> tuple[float, float, float]:
    """Ascending coefficients (c0, c1, c2) of the explicit n = 1 quadratic in beta:

    beta^2 - (2 Omega/(m omega))(2+|l|) beta
           + (Omega^2/(m^2 omega^2))(3+|l|)(1+|l|) - 4 m omega (1+|l|) = 0.

    Kept as an independent cross-check of the recurrence route.
    """
    al = abs(l)
    c2 = 1.0
    c1 = -(2.0 * Omega / (m * omega)) * (2.0 + al)
    c0 = (Omega ** 2 / (m * omega) ** 2) * (3.0 + al) * (1.0 + al) - 4.0 * m * omega * (1.0 + al)
    return c0, c1, c2


def energy_closed_form_n1(l: int, k: float, Omega: float, m: float, branch: str) -> float:
    """Explicit n = 1 energy:

    E = Omega l + (Omega/(2 m^2)) (2 m^3 (|l|+l+4)/Omega^2)^{1/3}
        * [2 + |l| +/- sqrt(1 + 2(1+|l|)/(|l|+l+4))] + k^2/(2m).

    branch selects the sign ("-" or "+"). Kept as an independent
    cross-check of solve_levels at n = 1.
    """
    if branch not in ("-", "+"):
        raise DomainError(f"branch must be '-' or '+', got {branch!r}")
    _check_rotation(Omega)
    al = abs(l)
    S = al + l + 4
    sign = -1.0 if branch == "-" else 1.0
    inv_omega = (2.0 * m ** 3 * S / Omega ** 2) ** (1.0 / 3.0)
    radial = (Omega / (2.0 * m * m)) * inv_omega * (2.0 + al + sign * math.sqrt(1.0 + 2.0 * (1.0 + al) / S))
    return Omega * l + radial + k * k / (2.0 * m)
