"""Parameters, derived scales, and potentials for a polarizable neutral
particle in crossed fields, described in a rotating frame.

Units are natural (hbar = c = 1). The particle has bare mass mbar and an
electric dipole moment induced by its polarizability alpha. The field
configuration is a uniform magnetic field of magnitude B0 along -z and a
radial electric field E = mu r^3 (from a charge density growing as r^2),
and the frame rotates with angular velocity Omega about z. Two derived
scales control everything downstream:

    m     = mbar + alpha * B0^2          (field-shifted effective mass)
    omega = alpha * mu * B0 / m          (effective cyclotron frequency)

After separating the axial factor e^{ikz} and the angular factor e^{il phi},
the remaining radial problem is a doubly anharmonic oscillator with an
r^2 + r^4 + r^6 potential. Its spectral parameter is

    beta = 2 m (E - Omega l) - k^2,

and the dimensionless couplings of the series solution are

    lambda  = (Omega / (m omega)) sqrt(2 / (m omega)),
    betabar = beta / sqrt(2 m omega),

with the dimensionless radial variable x = sqrt(m omega / 2) r^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "DomainError",
    "PhysicalParams",
    "DerivedScales",
    "QuantumNumbers",
    "PotentialCoeffs",
    "effective_mass",
    "cyclotron_frequency",
    "dimensionless_scales",
    "x_of_r",
    "r_of_x",
    "effective_potential",
    "doubly_anharmonic",
    "energy_from_beta",
    "beta_from_energy",
]


def effective_mass(mbar: float, alpha: float, B0: float) -> float:
    """Field-shifted mass m = mbar + alpha * B0**2."""
    if mbar <= 0:
        raise DomainError(f"bare mass must be positive, got mbar={mbar}")
    if alpha < 0:
        raise DomainError(f"polarizability must be nonnegative, got alpha={alpha}")
    return mbar + alpha * B0 * B0


def cyclotron_frequency(alpha: float, mu: float, B0: float, m: float) -> float:
    """Effective cyclotron frequency omega = alpha * mu * B0 / m."""
    if m <= 0:
        raise DomainError(f"effective mass must be positive, got m={m}")
    return alpha * mu * B0 / m


def dimensionless_scales(Omega: float, m: float, omega: float, beta: float) -> tuple[float, float]:
    """Map (Omega, m, omega, beta) to the dimensionless pair (lambda, betabar).

    lambda  = (Omega / (m omega)) * sqrt(2 / (m omega))
    betabar = beta / sqrt(2 m omega)
    """
    if m <= 0:
        raise DomainError(f"effective mass must be positive, got m={m}")
    if omega <= 0:
        raise DomainError(
            f"cyclotron frequency must be positive, got omega={omega}; "
            "the dimensionless map is undefined at omega <= 0"
        )
    lambda_dim = (Omega / (m * omega)) * math.sqrt(2.0 / (m * omega))
    betabar = beta / math.sqrt(2.0 * m * omega)
    return lambda_dim, betabar


def x_of_r(r, m: float, omega: float):
    """Dimensionless radial variable x = sqrt(m omega / 2) * r**2.

    Accepts a scalar or an array of radii r >= 0.
    """
    if m * omega <= 0:
        raise DomainError(f"m*omega must be positive, got m={m}, omega={omega}")
    return math.sqrt(m * omega / 2.0) * r * r


def r_of_x(x, m: float, omega: float):
    """Inverse of x_of_r: r = (2 / (m omega))**(1/4) * sqrt(x)."""
    if m * omega <= 0:
        raise DomainError(f"m*omega must be positive, got m={m}, omega={omega}")
    return (2.0 / (m * omega)) ** 0.25 * x ** 0.5


def effective_potential(r, m: float, omega: float, Omega: float, l: int):
    """Rotating-frame radial potential 2 m omega l r^2 + m omega Omega r^4 + m^2 omega^2 r^6.

    Vectorized over r.
    """
    r2 = r * r
    return (2.0 * m * omega * l + (m * omega * Omega + (m * omega) ** 2 * r2) * r2) * r2


def doubly_anharmonic(r, coeffs: "PotentialCoeffs"):
    """Generic sextic potential varpi r^2 + quartic r^4 + eta r^6, vectorized over r."""
    r2 = r * r
    return (coeffs.varpi + (coeffs.quartic_coeff + coeffs.eta * r2) * r2) * r2


def energy_from_beta(beta: float, m: float, Omega: float, l: int, k: float) -> float:
    """Energy from the radial spectral parameter: E = beta/(2m) + Omega l + k^2/(2m)."""
    if m <= 0:
        raise DomainError(f"effective mass must be positive, got m={m}")
    return beta / (2.0 * m) + Omega * l + k * k / (2.0 * m)


def beta_from_energy(E: float, m: float, Omega: float, l: int, k: float) -> float:
    """Radial spectral parameter from the energy: beta = 2m(E - Omega l) - k^2."""
    if m <= 0:
        raise DomainError(f"effective mass must be positive, got m={m}")
    return 2.0 * m * (E - Omega * l) - k * k


@dataclass(frozen=True)
class PhysicalParams:
    """Raw inputs: bare mass, polarizability, charge-density scale, field, rotation, axial k.

    Omega = 0 is allowed here (eigensolver-only runs use it); the quantization
    routines reject it with a dedicated error.
    """

    mbar: float
    alpha: float
    mu: float
    B0: float
    Omega: float
    k: float = 0.0

    def __post_init__(self):
        if self.mbar <= 0:
            raise DomainError(f"bare mass must be positive, got mbar={self.mbar}")
        if self.alpha <= 0:
            raise DomainError(f"polarizability must be positive, got alpha={self.alpha}")
        if self.mu <= 0:
            raise DomainError(f"charge-density scale must be positive, got mu={self.mu}")
        if self.B0 < 0:
            raise DomainError(f"field magnitude must be nonnegative, got B0={self.B0}")
        if self.Omega < 0:
            raise DomainError(f"rotation rate must be nonnegative, got Omega={self.Omega}")


@dataclass(frozen=True)
class DerivedScales:
    """Derived quantities (m, omega, lambda, beta, betabar) for one parameter set."""

    m: float
    omega: float
    lambda_dim: float
    beta: float
    betabar: float

    @classmethod
    def from_params(cls, params: PhysicalParams, beta: float = 0.0) -> "DerivedScales":
        m = effective_mass(params.mbar, params.alpha, params.B0)
        omega = cyclotron_frequency(params.alpha, params.mu, params.B0, m)
        lambda_dim, betabar = dimensionless_scales(params.Omega, m, omega, beta)
        return cls(m=m, omega=omega, lambda_dim=lambda_dim, beta=beta, betabar=betabar)


@dataclass(frozen=True)
class QuantumNumbers:
    """Mode labels: series degree n >= 1, angular momentum l, axial wavenumber k."""

    n: int
    l: int
    k: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise DomainError(f"n must be an integer, got {self.n!r}")
        if not isinstance(self.l, int) or isinstance(self.l, bool):
            raise DomainError(f"l must be an integer, got {self.l!r}")
        if self.n < 1:
            raise DomainError(f"radial mode index must satisfy n >= 1, got n={self.n}")


@dataclass(frozen=True)
class PotentialCoeffs:
    """Coefficients of the generic sextic potential varpi r^2 + quartic r^4 + eta r^6.

    Construction enforces confinement: either eta > 0, or eta = 0 with
    varpi > 0 and quartic >= 0 (the harmonic calibration limit).
    """

    varpi: float
    quartic_coeff: float
    eta: float

    def __post_init__(self):
        if self.eta < 0:
            raise DomainError(f"sextic coefficient must be nonnegative, got eta={self.eta}")
        if self.eta == 0 and not (self.varpi > 0 and self.quartic_coeff >= 0):
            raise DomainError(
                "unconfined potential: eta = 0 requires varpi > 0 and quartic >= 0, "
                f"got varpi={self.varpi}, quartic={self.quartic_coeff}"
            )
