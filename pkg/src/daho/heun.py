"""Frobenius-series engine for the biconfluent Heun equation.

In the dimensionless variable x = sqrt(m omega / 2) r^2 the radial problem
reduces, after peeling off the factor e^{-lambda x/2} e^{-x^2/2} x^{|l|/2},
to

    H'' + [(1+|l|)/x - lambda - 2x] H'
        + [lambda^2/4 - |l| - l - 2 - (lambda(1+|l|) - 2 betabar)/(2x)] H = 0,

whose regular solution about x = 0 is the biconfluent Heun function
H_B(a, b, c, d; x) with parameters

    a = |l|,  b = lambda,  c = lambda^2/4 - l,  d = -2 betabar.

The power series H = sum_k f_k x^k obeys a three-term recurrence. This
module computes the coefficients, evaluates H and the radial factor R,
detects termination into a polynomial, and checks the ODE residual with
exact series derivatives.

The series terminates at degree n exactly when both

    lambda^2/4 - |l| - l - 2 = 2n   and   f_{n+1} = 0

hold; the recurrence then forces every later coefficient to vanish. Those
two conditions are what the quantization module solves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError

__all__ = [
    "HeunParams",
    "SeriesCoefficients",
    "SeriesValue",
    "series_coefficients",
    "evaluate_H",
    "evaluate_R",
    "ode_residual",
    "polynomial_degree",
    "as_polynomial",
]

# Default truncation order; the Gaussian prefactor confines physical
# evaluation to moderate x where the series converges much earlier.
DEFAULT_N = 64

# A coefficient below TERMINATION_TOL * max|f_k| counts as zero when
# detecting termination.
TERMINATION_TOL = 1e-12


@dataclass(frozen=True)
class HeunParams:
    """Parameters of the biconfluent Heun equation for one (l, lambda, betabar).

    The canonical quadruple (a, b, c, d) is exposed as properties; the raw
    triple is stored because the recurrence uses |l| and l separately.
    """

    l: int
    lambda_dim: float
    betabar: float

    def __post_init__(self):
        if not isinstance(self.l, (int, np.integer)) or isinstance(self.l, bool):
            raise DomainError(f"l must be an integer, got {self.l!r}")

    @property
    def a(self) -> int:
        return abs(self.l)

    @property
    def b(self) -> float:
        return self.lambda_dim

    @property
    def c(self) -> float:
        return self.lambda_dim * self.lambda_dim / 4.0 - self.l

    @property
    def d(self) -> float:
        return -2.0 * self.betabar

    def constant_term(self) -> float:
        """The x-independent ODE coefficient lambda^2/4 - |l| - l - 2."""
        return self.lambda_dim * self.lambda_dim / 4.0 - abs(self.l) - self.l - 2.0


@dataclass(frozen=True)
class SeriesCoefficients:
    """Truncated series coefficients (f_0, ..., f_N) with f_0 = 1.

    ``terminated`` marks sequences known to be exact polynomials (the series
    terminates at degree N); as_polynomial produces such objects.
    """

    f: tuple[float, ...]
    terminated: bool = False

    def __post_init__(self):
        f = tuple(float(v) for v in self.f)
        if not f:
            raise DomainError("coefficient sequence must be non-empty")
        if f[0] != 1.0:
            raise DomainError(f"series is normalized to f0 = 1, got f0={f[0]}")
        object.__setattr__(self, "f", f)

    @property
    def N(self) -> int:
        return len(self.f) - 1


@dataclass(frozen=True)
class SeriesValue:
    """A series evaluation: value, last-term tail estimate, and flags.

    ``exact`` means no tail was dropped (polynomial, or x = 0);
    ``converged`` means exact, or the last three retained terms were each
    below 1e-15 of the partial sum.
    """

    value: float
    tail: float
    converged: bool
    exact: bool


def series_coefficients(params: HeunParams, N: int) -> SeriesCoefficients:
    """Run the three-term recurrence up to f_N.

    f_0 = 1,
    f_1 = lambda/2 - betabar/(1+|l|),
    f_{k+2} = { [lambda(2k+|l|+3) - 2 betabar] f_{k+1}
                - 2 (lambda^2/4 - |l| - l - 2 - 2k) f_k }
              / [ 2 (k+2)(k+2+|l|) ].
    """
    if N < 1:
        raise DomainError(f"truncation order must satisfy N >= 1, got N={N}")
    al = abs(params.l)
    lam = params.lambda_dim
    bb = params.betabar
    A = params.constant_term()
    f = [1.0, lam / 2.0 - bb / (1.0 + al)]
    for k in range(N - 1):
        num = (lam * (2 * k + al + 3) - 2.0 * bb) * f[k + 1] - 2.0 * (A - 2.0 * k) * f[k]
        f.append(num / (2.0 * (k + 2) * (k + 2 + al)))
    return SeriesCoefficients(tuple(f))


def evaluate_H(coeffs: SeriesCoefficients, x: float) -> SeriesValue:
    """Partial sum sum_k f_k x^k with a tail estimate and convergence flags."""
    if x < 0:
        raise DomainError(f"series variable must satisfy x >= 0, got x={x}")
    f = coeffs.f
    if x == 0.0:
        return SeriesValue(value=f[0], tail=0.0, converged=True, exact=True)
    terms = np.asarray(f) * x ** np.arange(len(f))
    value = float(math.fsum(terms))
    if coeffs.terminated:
        return SeriesValue(value=value, tail=0.0, converged=True, exact=True)
    tail = float(abs(terms[-1]))
    last = np.abs(terms[-3:])
    converged = bool(np.all(last <= 1e-15 * abs(value)))
    return SeriesValue(value=value, tail=tail, converged=converged, exact=False)


def evaluate_R(coeffs: SeriesCoefficients, x: float, lambda_dim: float, l: int) -> SeriesValue:
    """Radial factor R(x) = e^{-lambda x/2} e^{-x^2/2} x^{|l|/2} H(x).

    R(0) = 1 for l = 0 under the f_0 = 1 normalization, and R(0) = 0 for
    |l| > 0. Convergence flags are inherited from evaluate_H.
    """
    h = evaluate_H(coeffs, x)
    prefactor = math.exp(-lambda_dim * x / 2.0 - x * x / 2.0) * x ** (abs(l) / 2.0)
    return SeriesValue(
        value=prefactor * h.value,
        tail=prefactor * h.tail,
        converged=h.converged,
        exact=h.exact,
    )


def ode_residual(coeffs: SeriesCoefficients, params: HeunParams, x_grid) -> float:
    """Max absolute ODE residual of the truncated series over a grid of x > 0.

    Derivatives are taken term-by-term on the series, so the check is
    independent of any grid resolution.
    """
    xg = np.atleast_1d(np.asarray(x_grid, dtype=float))
    if xg.size == 0:
        raise DomainError("residual grid must be non-empty")
    if np.any(xg <= 0):
        raise DomainError("residual grid must be strictly positive; x = 0 is a singular point")
    c = np.asarray(coeffs.f)
    H = npoly.polyval(xg, c)
    Hp = npoly.polyval(xg, npoly.polyder(c))
    Hpp = npoly.polyval(xg, npoly.polyder(c, 2))
    al = params.a
    lam = params.lambda_dim
    A = params.constant_term()
    D = (lam * (1.0 + al) - 2.0 * params.betabar) / 2.0
    residual = Hpp + ((al + 1.0) / xg - lam - 2.0 * xg) * Hp + (A - D / xg) * H
    return float(np.max(np.abs(residual)))


def polynomial_degree(coeffs: SeriesCoefficients, tol: float = TERMINATION_TOL):
    """Degree of the series if it visibly terminates, else None.

    Reports n when every coefficient beyond f_n is below tol * max|f_k| and
    at least two such vanishing coefficients are present (so that the
    recurrence-closure argument applies). Callers should compute the series
    to N >= n + 2.
    """
    f = np.abs(np.asarray(coeffs.f))
    significant = np.nonzero(f > tol * f.max())[0]
    n = int(significant[-1])
    if n > len(f) - 3:
        return None
    return n


def as_polynomial(coeffs: SeriesCoefficients, tol: float = TERMINATION_TOL):
    """Degree-truncated copy of a terminating series, else None.

    Drops the sub-threshold float dust beyond the detected degree so that
    evaluation, residual checks, and root counting see the exact polynomial.
    """
    n = polynomial_degree(coeffs, tol)
    if n is None:
        return None
    return SeriesCoefficients(coeffs.f[: n + 1], terminated=True)
