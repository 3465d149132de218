"""Transition probability, peak time, and peak value for the general case.

The success probability of the search is modeled as a pure sinusoid in the
phase a*t/hbar, where ``a`` is the half-splitting of the 2x2 generator:

    P(t) = C sin^2(a t / hbar) + x^2 cos^2(a t / hbar)

with C = |(h11 - h22) x + 2 h12 sqrt(1 - x^2)|^2 / ((h11 - h22)^2 + 4 h12 h21).
The peak P_max = C is reached first at t* = pi hbar / (2a).

Validity domain: the sinusoid form drops the cross term between the two
eigenfrequency branches, which is legitimate exactly when the branch
product a_tilde * conj(b_tilde) is real, i.e. when the off-diagonal entry
h12 is real (Im(beta) = 0).  For complex beta the exact evolution carries
an extra quadrature term

    - 2 Im(a_tilde conj(b_tilde)) sin(2 a t / hbar),
      with Im(a_tilde conj(b_tilde)) = -x (1 - x^2) E Im(beta) / (2a),

which vanishes as x -> 0; the closed forms are then the small-overlap
asymptotics of the true dynamics.  The brute-force Runge-Kutta propagator
below is the arbiter of exact dynamics everywhere: it sees only the raw
matrix entries and shares nothing with the spectral module or the closed
forms.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateOffDiagonalError, StepUnderflowError, ValidationError
from .hamiltonian import HamiltonianParams, MatrixRep, matrix_rep, validate_overlap
from .spectral import Spectrum, gap_parameter


class NoOscillation:
    """Marker returned instead of a peak time when the spectrum is gapless.

    A zero gap means the generator is a multiple of the identity on the
    search plane, so the success probability sits at x^2 forever.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "NoOscillation"


NO_OSCILLATION = NoOscillation()


@dataclass(frozen=True)
class TildeCoeffs:
    """Interference amplitudes of the two eigenfrequency branches.

    a_tilde + b_tilde always equals the overlap x (the amplitude at t = 0),
    and a_tilde * conj(b_tilde) is real for Hermitian generators.
    """

    a_tilde: complex
    b_tilde: complex


@dataclass(frozen=True)
class SearchOutcome:
    """Peak success probability, when it is first reached, and the gap."""

    p_max: float
    t_star: float | NoOscillation
    gap_a: float


@dataclass(frozen=True)
class ProbabilityCurve:
    """Sampled success probability on a uniform time grid."""

    times: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        if len(self.times) != len(self.probs):
            raise ValueError("times and probs must have equal length")


def _require_nonnegative_time(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise ValidationError(f"time must be finite and >= 0, got {t!r}")
    return t


def _peak_coefficient(m: MatrixRep, x: float) -> tuple[float, float]:
    """(sin^2 coefficient, radicand); coefficient is x^2 when the gap is 0."""
    radicand = (m.h11 - m.h22) ** 2 + 4.0 * (m.h12 * m.h21).real
    if radicand == 0.0:
        return x * x, 0.0
    s = math.sqrt(1.0 - x * x)
    coeff = abs((m.h11 - m.h22) * x + 2.0 * m.h12 * s) ** 2 / radicand
    return coeff, radicand


def transition_probability(m: MatrixRep, x: float, t: float, hbar: float) -> float:
    """Success probability at time t from the closed-form sinusoid."""
    x = validate_overlap(x)
    t = _require_nonnegative_time(t)
    coeff, radicand = _peak_coefficient(m, x)
    if radicand == 0.0:
        return x * x
    phase = math.sqrt(radicand) * t / (2.0 * hbar)
    sin_ph = math.sin(phase)
    cos_ph = math.cos(phase)
    return coeff * sin_ph * sin_ph + x * x * cos_ph * cos_ph


def tilde_coeffs(spectrum: Spectrum, x: float) -> TildeCoeffs:
    """Branch amplitudes built from the eigenvector coefficients A and B."""
    x = validate_overlap(x)
    if spectrum.coeff_A is None or spectrum.coeff_B is None:
        raise DegenerateOffDiagonalError(
            "branch amplitudes undefined for a diagonal generator"
        )
    A, B = spectrum.coeff_A, spectrum.coeff_B
    s = math.sqrt(1.0 - x * x)
    a_tilde = A * (x - B * s) / (A - B)
    b_tilde = -B * (x - A * s) / (A - B)
    return TildeCoeffs(a_tilde=a_tilde, b_tilde=b_tilde)


def amplitude(spectrum: Spectrum, x: float, t: float, hbar: float) -> complex:
    """Complex transition amplitude <w| exp(-i H t / hbar) |s>.

    Splits the evolution into a global phase at the mean eigenvalue times
    two counter-rotating branches at the half-gap frequency.  Its squared
    magnitude equals :func:`transition_probability`.
    """
    t = _require_nonnegative_time(t)
    tc = tilde_coeffs(spectrum, x)
    mean_phase = -1j * spectrum.trace * t / (2.0 * hbar)
    branch = spectrum.gap_a * t / hbar
    return np.exp(mean_phase) * (
        tc.a_tilde * np.exp(1j * branch) + tc.b_tilde * np.exp(-1j * branch)
    )


def p_max(p: HamiltonianParams, x: float) -> float:
    """Peak success probability as an explicit rational function of the
    couplings (reduced polynomial form in alpha, beta, delta, x)."""
    x = validate_overlap(x)
    beta = complex(p.beta)
    b_sq = abs(beta) ** 2
    re_b = beta.real
    ecc = b_sq - re_b * re_b  # |beta|^2 - Re(beta)^2, the "complexity" of beta
    al, de = p.alpha, p.delta
    num = (
        4.0 * ecc * x**4
        + ((al + de) ** 2 - 8.0 * ecc) * x**2
        + 4.0 * re_b * (al + de) * x
        + 4.0 * b_sq
    )
    den = (
        4.0 * (al * de - ecc) * x**2
        + 4.0 * re_b * (al + de) * x
        + ((al - de) ** 2 + 4.0 * b_sq)
    )
    if den == 0.0:
        return x * x
    return num / den


def p_max_unreduced(p: HamiltonianParams, x: float) -> float:
    """Peak success probability in its unreduced matrix-element form.

    Kept alongside :func:`p_max` as a consistency cross-check between the
    two published arrangements of the same rational function.
    """
    x = validate_overlap(x)
    beta = complex(p.beta)
    s_sq = 1.0 - x * x
    diff = (p.alpha - p.delta) + 2.0 * beta.real * x + 2.0 * p.delta * x * x
    off = beta + p.delta * x
    num = abs(diff * x + 2.0 * off * s_sq) ** 2
    den = diff * diff + 4.0 * s_sq * (off * off.conjugate()).real
    if den == 0.0:
        return x * x
    return num / den


def t_star(p: HamiltonianParams, x: float) -> float | NoOscillation:
    """First time the success probability peaks: pi hbar / (2a)."""
    x = validate_overlap(x)
    a = gap_parameter(matrix_rep(p, x))
    if a == 0.0:
        return NO_OSCILLATION
    return math.pi * p.hbar / (2.0 * a)


def search_outcome(p: HamiltonianParams, x: float) -> SearchOutcome:
    """Bundle peak probability, peak time, and gap for one parameter set."""
    x = validate_overlap(x)
    a = gap_parameter(matrix_rep(p, x))
    if a == 0.0:
        return SearchOutcome(p_max=x * x, t_star=NO_OSCILLATION, gap_a=0.0)
    return SearchOutcome(
        p_max=p_max(p, x), t_star=math.pi * p.hbar / (2.0 * a), gap_a=a
    )


# Step refinement of the brute-force propagator: at least this many RK4
# steps per characteristic time hbar / ||H||.  The input contract only
# demands 50; doubling it buys two extra digits of headroom against the
# 1e-8 oracle tolerance at negligible cost.
_STEPS_PER_CHARACTERISTIC_TIME = 100
_MAX_STEPS = 1_000_000_000


def propagate_numeric(m: MatrixRep, x: float, t: float, hbar: float) -> float:
    """Brute-force success probability at time t.

    Integrates i hbar dpsi/dt = H psi from the source state with fixed-step
    classical RK4 and returns |<w|psi(t)>|^2.  Uses only the raw matrix
    entries; deliberately independent of every closed-form code path.
    """
    x = validate_overlap(x)
    t = _require_nonnegative_time(t)
    if t == 0.0:
        return x * x

    norm = m.frobenius_norm()
    step_cap = t / 100.0
    if norm > 0.0:
        step_cap = min(step_cap, hbar / (_STEPS_PER_CHARACTERISTIC_TIME * norm))
    n_steps = math.ceil(t / step_cap)
    if n_steps > _MAX_STEPS:
        raise StepUnderflowError(
            f"step criterion demands {n_steps} steps (> {_MAX_STEPS})"
        )
    dt = t / n_steps

    h11, h12, h21, h22 = m.h11, m.h12, m.h21, m.h22
    scale = -1j / hbar
    cw = complex(x)
    cr = complex(math.sqrt(1.0 - x * x))
    for _ in range(n_steps):
        k1w = scale * (h11 * cw + h12 * cr)
        k1r = scale * (h21 * cw + h22 * cr)
        w2 = cw + 0.5 * dt * k1w
        r2 = cr + 0.5 * dt * k1r
        k2w = scale * (h11 * w2 + h12 * r2)
        k2r = scale * (h21 * w2 + h22 * r2)
        w3 = cw + 0.5 * dt * k2w
        r3 = cr + 0.5 * dt * k2r
        k3w = scale * (h11 * w3 + h12 * r3)
        k3r = scale * (h21 * w3 + h22 * r3)
        w4 = cw + dt * k3w
        r4 = cr + dt * k3r
        k4w = scale * (h11 * w4 + h12 * r4)
        k4r = scale * (h21 * w4 + h22 * r4)
        cw += dt * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0
        cr += dt * (k1r + 2.0 * k2r + 2.0 * k3r + k4r) / 6.0
    return abs(cw) ** 2


def curve_probabilities(
    p: HamiltonianParams, x: float, times: np.ndarray
) -> np.ndarray:
    """Vectorized closed-form success probability on an array of times."""
    x = validate_overlap(x)
    m = matrix_rep(p, x)
    coeff, radicand = _peak_coefficient(m, x)
    times = np.asarray(times, dtype=float)
    if radicand == 0.0:
        return np.full_like(times, x * x)
    phase = np.sqrt(radicand) * times / (2.0 * p.hbar)
    return coeff * np.sin(phase) ** 2 + x * x * np.cos(phase) ** 2


def sample_curve(
    p: HamiltonianParams, x: float, t_end: float, n: int
) -> ProbabilityCurve:
    """Closed-form success probability on a uniform grid over [0, t_end]."""
    if n < 2:
        raise ValidationError(f"need at least 2 samples, got {n}")
    t_end = float(t_end)
    if not (math.isfinite(t_end) and t_end > 0.0):
        raise ValidationError(f"t_end must be finite and > 0, got {t_end!r}")
    times = np.linspace(0.0, t_end, int(n))
    return ProbabilityCurve(times=times, probs=curve_probabilities(p, x, times))
