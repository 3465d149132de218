"""Closed-form eigen-decomposition of the 2x2 Hermitian generator.

For a Hermitian matrix ((h11, h12), (h21, h22)) the radicand
(h11 - h22)^2 + 4 h12 h21 equals (h11 - h22)^2 + 4|h12|^2 >= 0, so both
eigenvalues are real and the half-splitting ``a`` (the quantity that sets
the oscillation frequency of the transition probability) is real too.
"""

import math
from dataclasses import dataclass

from .errors import DegenerateOffDiagonalError
from .hamiltonian import MatrixRep

# Below this magnitude the off-diagonal entry is treated as zero and the
# eigenvector coefficients are undefined.
OFF_DIAGONAL_FLOOR = 1e-300


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues, half-gap, and eigenvector coefficients (A, B).

    coeff_A and coeff_B are the first components of the (unnormalized)
    eigenvectors (A, 1) and (B, 1) of lambda_minus and lambda_plus; they
    are None when the matrix is already diagonal (h21 = 0).
    """

    lambda_minus: float
    lambda_plus: float
    gap_a: float
    coeff_A: complex | None = None
    coeff_B: complex | None = None

    @property
    def trace(self) -> float:
        return self.lambda_minus + self.lambda_plus


def _radicand(m: MatrixRep) -> float:
    # h12 * h21 = |h12|^2 for Hermitian input; the imaginary part is exactly
    # zero in IEEE arithmetic, so taking .real loses nothing.
    return (m.h11 - m.h22) ** 2 + 4.0 * (m.h12 * m.h21).real


def eigenvalues(m: MatrixRep) -> tuple[float, float]:
    """Both real eigenvalues, returned as (lambda_minus, lambda_plus)."""
    root = math.sqrt(_radicand(m))
    half_trace = 0.5 * (m.h11 + m.h22)
    return half_trace - 0.5 * root, half_trace + 0.5 * root


def gap_parameter(m: MatrixRep) -> float:
    """Half the eigenvalue splitting: a = (lambda_plus - lambda_minus) / 2."""
    return 0.5 * math.sqrt(_radicand(m))


def eigen_coeffs(m: MatrixRep) -> tuple[complex, complex]:
    """First components A, B of the eigenvectors (A, 1) and (B, 1).

        A = ((h11 - h22) - 2a) / (2 h21),  B = ((h11 - h22) + 2a) / (2 h21)

    satisfying A * B = -h12 / h21.  Raises DegenerateOffDiagonalError when
    h21 vanishes (the matrix is then already diagonal and the direct
    probability formula must be used instead).
    """
    if abs(m.h21) <= OFF_DIAGONAL_FLOOR:
        raise DegenerateOffDiagonalError(
            "off-diagonal entry is zero; eigenvector coefficients undefined"
        )
    diff = m.h11 - m.h22
    root = math.sqrt(_radicand(m))
    denom = 2.0 * m.h21
    return (diff - root) / denom, (diff + root) / denom


def decompose(m: MatrixRep) -> Spectrum:
    """Full spectral data; A/B are omitted when the matrix is diagonal."""
    lam_minus, lam_plus = eigenvalues(m)
    a = 0.5 * (lam_plus - lam_minus)
    if abs(m.h21) <= OFF_DIAGONAL_FLOOR:
        return Spectrum(lambda_minus=lam_minus, lambda_plus=lam_plus, gap_a=a)
    coeff_a, coeff_b = eigen_coeffs(m)
    return Spectrum(
        lambda_minus=lam_minus,
        lambda_plus=lam_plus,
        gap_a=a,
        coeff_A=coeff_a,
        coeff_B=coeff_b,
    )


def reconstruction_residual(m: MatrixRep) -> float:
    """Max-entry error of rebuilding m from its eigensystem.

    Forms M = ((A, B), (1, 1)), its explicit inverse
    (1/(A-B)) * ((1, -B), (-1, A)), and returns the largest absolute entry
    of M diag(lambda_minus, lambda_plus) M^-1 - m.
    """
    coeff_a, coeff_b = eigen_coeffs(m)
    lam_minus, lam_plus = eigenvalues(m)
    det = coeff_a - coeff_b
    # Rows of M diag M^-1, written out to avoid any array machinery.
    r11 = (coeff_a * lam_minus - coeff_b * lam_plus) / det
    r12 = (-coeff_a * lam_minus * coeff_b + coeff_b * lam_plus * coeff_a) / det
    r21 = (lam_minus - lam_plus) / det
    r22 = (-lam_minus * coeff_b + lam_plus * coeff_a) / det
    return max(
        abs(r11 - m.h11),
        abs(r12 - m.h12),
        abs(r21 - m.h21),
        abs(r22 - m.h22),
    )
