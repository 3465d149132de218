"""How likely is a large source-target overlap under a prior on the target?

A normalized n-qubit state lives on a (2N-1)-sphere (N = 2^n complex
dimensions).  With the source at the pole and the target drawn from a
density rho(theta) over the polar angle, the chance that the overlap
x = cos(theta) exceeds a bound is the ratio of two weighted integrals:

    Prob(x >= x_bar) = int_0^acos(x_bar) rho(theta) sin(theta)^(2N-2) dtheta
                       / int_0^(pi/2)    rho(theta) sin(theta)^(2N-2) dtheta

Any constant factor in rho cancels, so densities here are unnormalized.
The uniform (maximum-ignorance) prior has a closed form through the
regularized incomplete beta function, which doubles as an oracle for the
adaptive quadrature used on non-uniform priors.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special

from .errors import QuadratureFailureError, ValidationError

MAX_QUAD_PANELS = 1_000_000

_GL_COARSE = np.polynomial.legendre.leggauss(10)
_GL_FINE = np.polynomial.legendre.leggauss(20)


@dataclass(frozen=True)
class PriorSpec:
    """Gaussian-bump target prior on the polar angle, damped near the equator.

    hilbert_dim_n is the complex dimension N of the state space; mu_theta
    and sigma_sq are the center and variance of the Gaussian factor.
    """

    hilbert_dim_n: int
    mu_theta: float
    sigma_sq: float

    def __post_init__(self):
        if int(self.hilbert_dim_n) != self.hilbert_dim_n or self.hilbert_dim_n < 2:
            raise ValidationError(
                f"Hilbert dimension must be an integer >= 2, got {self.hilbert_dim_n!r}"
            )
        if not (0.0 <= self.mu_theta <= math.pi / 2):
            raise ValidationError(
                f"mu_theta must lie in [0, pi/2], got {self.mu_theta!r}"
            )
        if not (math.isfinite(self.sigma_sq) and self.sigma_sq > 0.0):
            raise ValidationError(f"sigma_sq must be > 0, got {self.sigma_sq!r}")


def target_density(theta, spec: PriorSpec):
    """Unnormalized prior density of the target's polar angle.

        exp(-(theta - mu)^2 / (2 sigma^2)) / (1 + (10 sin(theta))^(2N-2))

    The denominator suppresses the sin^(2N-2) surface-area weight so their
    product stays roughly flat away from the pole.  Accepts scalars or
    arrays.
    """
    theta = np.asarray(theta, dtype=float)
    power = 2 * spec.hilbert_dim_n - 2
    with np.errstate(over="ignore"):
        bump = np.exp(-((theta - spec.mu_theta) ** 2) / (2.0 * spec.sigma_sq))
        damp = 1.0 + (10.0 * np.sin(theta)) ** power
    out = bump / damp
    return out if out.shape else float(out)


def adaptive_quad(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    atol: float = 1e-12,
    rtol: float = 1e-12,
    max_panels: int = MAX_QUAD_PANELS,
) -> float:
    """Adaptive bisection with a 20-point Gauss-Legendre rule per panel.

    A panel is accepted when the 20- vs 10-point discrepancy is within its
    share of atol plus rtol times the panel value; for nonnegative
    integrands the accepted total then carries the same relative accuracy.
    Raises QuadratureFailureError when the panel budget runs out.
    """
    a, b = float(a), float(b)
    if a == b:
        return 0.0
    width = b - a
    x_c, w_c = _GL_COARSE
    x_f, w_f = _GL_FINE
    stack = [(a, b)]
    total = 0.0
    panels_used = 0
    while stack:
        lo, hi = stack.pop()
        panels_used += 1
        if panels_used > max_panels:
            raise QuadratureFailureError(
                f"tolerance not met within {max_panels} panels"
            )
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        fine = half * float(np.dot(w_f, f(mid + half * x_f)))
        coarse = half * float(np.dot(w_c, f(mid + half * x_c)))
        err = abs(fine - coarse)
        budget = atol * abs(hi - lo) / abs(width) + rtol * abs(fine)
        if err <= budget or mid <= min(lo, hi) or mid >= max(lo, hi):
            total += fine
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    return total


def _check_bound(x_bar: float) -> float:
    x_bar = float(x_bar)
    if not (math.isfinite(x_bar) and 0.0 <= x_bar <= 1.0):
        raise ValidationError(f"overlap bound must be in [0, 1], got {x_bar!r}")
    return x_bar


def prob_overlap_at_least(x_bar: float, spec: PriorSpec) -> float:
    """Prob(x >= x_bar) for a target drawn from the given prior."""
    x_bar = _check_bound(x_bar)
    theta_bar = math.acos(x_bar)
    if theta_bar == 0.0:
        return 0.0
    if theta_bar == math.pi / 2:
        return 1.0
    power = 2 * spec.hilbert_dim_n - 2

    def weighted(theta: np.ndarray) -> np.ndarray:
        return target_density(theta, spec) * np.sin(theta) ** power

    denominator = adaptive_quad(weighted, 0.0, math.pi / 2)
    numerator = adaptive_quad(weighted, 0.0, theta_bar)
    return numerator / denominator


def uniform_prob_overlap(x_bar: float, n: int) -> float:
    """Prob(x >= x_bar) under absolute ignorance of the target.

    Substituting u = sin^2(theta) turns the integral ratio into the
    regularized incomplete beta function I_u(N - 1/2, 1/2).  The same
    ratio is recomputed by quadrature and the two routes must agree to
    1e-10; the (more accurate) analytic value is returned.
    """
    x_bar = _check_bound(x_bar)
    if int(n) != n or n < 2:
        raise ValidationError(f"Hilbert dimension must be an integer >= 2, got {n!r}")
    theta_bar = math.acos(x_bar)
    power = 2 * int(n) - 2

    analytic = float(special.betainc(n - 0.5, 0.5, math.sin(theta_bar) ** 2))

    def weight(theta: np.ndarray) -> np.ndarray:
        return np.sin(theta) ** power

    denominator = adaptive_quad(weight, 0.0, math.pi / 2)
    numerator = adaptive_quad(weight, 0.0, theta_bar)
    quadrature = numerator / denominator

    if abs(analytic - quadrature) > 1e-10 * max(abs(analytic), abs(quadrature), 1e-300):
        raise QuadratureFailureError(
            f"analytic ({analytic!r}) and quadrature ({quadrature!r}) routes disagree"
        )
    return analytic
