"""Two-level reduction of the generalized analog search Hamiltonian.

The generator that drives a source state |s> toward a target state |w> is

    H = E * (alpha |w><w| + beta |w><s| + conj(beta) |s><w| + delta |s><s|)

with alpha, delta real and beta complex (Hermiticity fixes the |s><w|
coefficient to conj(beta)).  Because H never couples out of the plane
spanned by |w> and |s>, all dynamics happens in the 2-dimensional space
spanned by the orthonormal pair {|w>, |r>}, where |r> is the Gram-Schmidt
remainder of |s> against |w>.  This module validates parameters and builds
the 2x2 Hermitian matrix of H in that basis.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidOverlapError,
    NonFiniteError,
    NonHermitianError,
    NonPositiveScaleError,
)

HERMITICITY_TOL = 1e-12


@dataclass(frozen=True)
class HamiltonianParams:
    """Validated coupling coefficients plus the physical scales E and h."""

    alpha: float
    delta: float
    beta: complex
    energy_E: float = 1.0
    planck_h: float = 1.0

    @property
    def gamma(self) -> complex:
        """Coefficient of |s><w|, always the conjugate of beta."""
        return complex(self.beta).conjugate()

    @property
    def hbar(self) -> float:
        return self.planck_h / (2.0 * math.pi)


@dataclass(frozen=True)
class MatrixRep:
    """2x2 Hermitian matrix of the generator in the {|w>, |r>} basis."""

    h11: float
    h12: complex
    h21: complex
    h22: float

    def as_array(self) -> np.ndarray:
        return np.array([[self.h11, self.h12], [self.h21, self.h22]], dtype=complex)

    def frobenius_norm(self) -> float:
        return math.sqrt(
            self.h11 * self.h11
            + abs(self.h12) ** 2
            + abs(self.h21) ** 2
            + self.h22 * self.h22
        )


@dataclass(frozen=True)
class StateVec:
    """Normalized state with components along |w> and |r>."""

    c_w: complex
    c_r: complex

    def __post_init__(self):
        norm_sq = abs(self.c_w) ** 2 + abs(self.c_r) ** 2
        if abs(norm_sq - 1.0) > 1e-12:
            raise ValueError(f"state not normalized: |c|^2 = {norm_sq!r}")


def _require_finite(name: str, value: complex) -> None:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteError(f"{name} must be finite, got {value!r}")


def validate_params(
    alpha: float,
    delta: float,
    beta: complex = 0.0,
    energy_E: float = 1.0,
    planck_h: float = 1.0,
    gamma: complex | None = None,
) -> HamiltonianParams:
    """Check the coupling tuple and return an immutable parameter set.

    alpha and delta must be real (a complex value with a nonzero imaginary
    part cannot come from a Hermitian generator); a gamma value, when
    supplied, is only compared against conj(beta) and never stored.
    """
    for name, value in (("alpha", alpha), ("delta", delta), ("beta", beta),
                        ("energy_E", energy_E), ("planck_h", planck_h)):
        _require_finite(name, value)

    for name, value in (("alpha", alpha), ("delta", delta)):
        if abs(complex(value).imag) > HERMITICITY_TOL:
            raise NonHermitianError(f"{name} must be real, got {value!r}")

    if gamma is not None:
        _require_finite("gamma", gamma)
        expected = complex(beta).conjugate()
        if abs(complex(gamma) - expected) > HERMITICITY_TOL:
            raise NonHermitianError(
                f"gamma={gamma!r} is not the conjugate of beta={beta!r}"
            )

    energy_E = float(complex(energy_E).real)
    planck_h = float(complex(planck_h).real)
    if energy_E <= 0.0:
        raise NonPositiveScaleError(f"energy scale must be > 0, got {energy_E!r}")
    if planck_h <= 0.0:
        raise NonPositiveScaleError(f"Planck constant must be > 0, got {planck_h!r}")

    return HamiltonianParams(
        alpha=float(complex(alpha).real),
        delta=float(complex(delta).real),
        beta=complex(beta),
        energy_E=energy_E,
        planck_h=planck_h,
    )


def validate_overlap(x: float) -> float:
    """Check that the source-target overlap lies strictly inside (0, 1).

    The endpoints are rejected: at x = 1 the Gram-Schmidt remainder is
    undefined (division by sqrt(1 - x^2)), and x = 0 is covered by the
    dedicated small-overlap limit in :mod:`qsearch.cases`.
    """
    x = float(x)
    if not math.isfinite(x):
        raise InvalidOverlapError(f"overlap must be finite, got {x!r}")
    if not 0.0 < x < 1.0:
        raise InvalidOverlapError(f"overlap must satisfy 0 < x < 1, got {x!r}")
    return x


def matrix_rep(p: HamiltonianParams, x: float) -> MatrixRep:
    """Matrix of the generator in the {|w>, |r>} basis.

    Entries (s = sqrt(1 - x^2)):

        h11 = E (alpha + 2 Re(beta) x + delta x^2)
        h12 = E s (beta + delta x)
        h21 = E s (conj(beta) + delta x) = conj(h12)
        h22 = E delta (1 - x^2)
    """
    x = validate_overlap(x)
    E = p.energy_E
    s = math.sqrt(1.0 - x * x)
    beta = complex(p.beta)
    h11 = E * (p.alpha + 2.0 * beta.real * x + p.delta * x * x)
    h12 = E * s * (beta + p.delta * x)
    h21 = E * s * (beta.conjugate() + p.delta * x)
    h22 = E * p.delta * (1.0 - x * x)
    return MatrixRep(h11=h11, h12=h12, h21=h21, h22=h22)


def source_state(x: float) -> StateVec:
    """Source state in the {|w>, |r>} basis: (x, sqrt(1 - x^2))."""
    x = validate_overlap(x)
    return StateVec(c_w=complex(x), c_r=complex(math.sqrt(1.0 - x * x)))
