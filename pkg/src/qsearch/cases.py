"""The special-case sub-families of the search Hamiltonian.

Whether the peak success probability reaches 1 is decided entirely by two
features of the couplings: the asymmetry alpha != delta and the complexity
Im(beta) != 0.  The fully symmetric/real combinations (cases 1, 3, 5) are
the "optimal" sub-family with P_max = 1; all others peak below 1 in
general.  Each case also has a closed-form peak time, which for the
optimal sub-family takes the simple reciprocal forms

    case 1: t* = (1 / (alpha x)) * pi hbar / (2E)        (Farhi-Gutmann)
    case 3: t* = (1 / beta)      * pi hbar / (2E)        (x-independent)
    case 5: t* = (1 / (alpha x + beta)) * pi hbar / (2E)

valid in the positive-coupling regime where the paper-of-record family is
defined.
"""

import math
from enum import Enum

from . import dynamics
from .errors import LabelMismatchError, ValidationError
from .hamiltonian import HamiltonianParams, validate_overlap, validate_params

CLASSIFY_TOL = 1e-12


class CaseLabel(Enum):
    GENERAL = "general"  # alpha != delta, beta complex
    CASE1 = "case1"      # alpha = delta, beta = 0
    CASE2 = "case2"      # alpha != delta, beta = 0
    CASE3 = "case3"      # alpha = delta = 0, beta real != 0
    CASE4 = "case4"      # alpha = delta = 0, beta complex
    CASE5 = "case5"      # alpha = delta != 0, beta real != 0
    CASE6 = "case6"      # alpha = delta != 0, beta complex
    CASE7 = "case7"      # alpha != delta, beta real != 0


#: Sub-family whose peak success probability is exactly 1.
OPTIMAL_CASES = frozenset({CaseLabel.CASE1, CaseLabel.CASE3, CaseLabel.CASE5})


def classify(p: HamiltonianParams, tol: float = CLASSIFY_TOL) -> CaseLabel:
    """Assign the unique case label, checking the most constrained first.

    The zero Hamiltonian counts as case 1 (with zero gap).
    """
    beta = complex(p.beta)
    beta_zero = abs(beta) <= tol
    beta_real = abs(beta.imag) <= tol
    symmetric = abs(p.alpha - p.delta) <= tol
    alpha_zero = abs(p.alpha) <= tol
    delta_zero = abs(p.delta) <= tol

    if symmetric and beta_zero:
        return CaseLabel.CASE1
    if alpha_zero and delta_zero and beta_real:
        return CaseLabel.CASE3
    if symmetric and beta_real and not beta_zero:
        return CaseLabel.CASE5
    if alpha_zero and delta_zero:
        return CaseLabel.CASE4
    if symmetric:
        return CaseLabel.CASE6
    if beta_zero:
        return CaseLabel.CASE2
    if beta_real:
        return CaseLabel.CASE7
    return CaseLabel.GENERAL


def _check_label(label: CaseLabel, p: HamiltonianParams) -> None:
    actual = classify(p)
    if actual is not label:
        raise LabelMismatchError(
            f"parameters classify as {actual.value}, not {label.value}"
        )


def case_p_max(label: CaseLabel, p: HamiltonianParams, x: float) -> float:
    """Peak success probability from the per-case closed form."""
    _check_label(label, p)
    x = validate_overlap(x)
    beta = complex(p.beta)
    al, de = p.alpha, p.delta
    s_sq = 1.0 - x * x

    if label in OPTIMAL_CASES:
        return 1.0
    if label is CaseLabel.CASE2:
        return (al + de) ** 2 * x * x / (4.0 * x * x * al * de + (al - de) ** 2)
    if label is CaseLabel.CASE4:
        rb_sq = beta.real**2
        b_sq = abs(beta) ** 2
        num = 8.0 * rb_sq * x**2 - 4.0 * rb_sq * x**4 + 4.0 * b_sq * s_sq**2
        den = 4.0 * rb_sq * x**2 + 4.0 * b_sq * s_sq
        return num / den
    if label is CaseLabel.CASE6:
        diag = 2.0 * beta.real * x + 2.0 * al * x * x
        num = abs(diag * x + 2.0 * (al * x + beta) * s_sq) ** 2
        den = diag**2 + 4.0 * s_sq * (
            abs(beta) ** 2 + 2.0 * al * beta.real * x + al * al * x * x
        )
        return num / den
    if label is CaseLabel.CASE7:
        b = beta.real
        num = ((al + de) * x + 2.0 * b) ** 2
        den = 4.0 * (al * de * x * x + b * (al + de) * x + b * b) + (al - de) ** 2
        return num / den
    return dynamics.p_max(p, x)


def case_t_star(label: CaseLabel, p: HamiltonianParams, x: float) -> float:
    """Peak time from the per-case closed form.

    The reciprocal forms of cases 1, 3, and 5 presuppose the positive
    couplings of the published sub-families; outside that regime use the
    general :func:`qsearch.dynamics.t_star`.
    """
    _check_label(label, p)
    x = validate_overlap(x)
    beta = complex(p.beta)
    al, de = p.alpha, p.delta
    s_sq = 1.0 - x * x
    quarter_period = math.pi * p.hbar / (2.0 * p.energy_E)

    if label is CaseLabel.CASE1:
        return quarter_period / (al * x)
    if label is CaseLabel.CASE2:
        return 2.0 * quarter_period / math.sqrt(4.0 * x * x * al * de + (al - de) ** 2)
    if label is CaseLabel.CASE3:
        return quarter_period / beta.real
    if label is CaseLabel.CASE4:
        rad = 4.0 * beta.real**2 * x * x + 4.0 * abs(beta) ** 2 * s_sq
        return 2.0 * quarter_period / math.sqrt(rad)
    if label is CaseLabel.CASE5:
        return quarter_period / (al * x + beta.real)
    if label is CaseLabel.CASE6:
        diag = 2.0 * beta.real * x + 2.0 * al * x * x
        rad = diag**2 + 4.0 * s_sq * (
            abs(beta) ** 2 + 2.0 * al * beta.real * x + al * al * x * x
        )
        return 2.0 * quarter_period / math.sqrt(rad)
    if label is CaseLabel.CASE7:
        b = beta.real
        rad = 4.0 * (al * de * x * x + b * (al + de) * x + b * b) + (al - de) ** 2
        return 2.0 * quarter_period / math.sqrt(rad)

    value = dynamics.t_star(p, x)
    if isinstance(value, dynamics.NoOscillation):
        raise ValidationError("gapless Hamiltonian has no peak time")
    return value


_PERTURBATIVE_LABELS = (CaseLabel.CASE2, CaseLabel.CASE7)


def perturbative_p_max(label: CaseLabel, p: HamiltonianParams, x: float) -> float:
    """Second-order peak probability in the small asymmetry alpha - delta.

        case 2: 1 - (1/4) (1 - x^2) (alpha - delta)^2 / (alpha x)^2
        case 7: 1 - (1/4) (1 - x^2) (alpha - delta)^2 / (alpha x + beta)^2

    The neglected remainder is third order; callers keep alpha - delta
    small and alpha >= delta.
    """
    if label not in _PERTURBATIVE_LABELS:
        raise LabelMismatchError(f"no small-asymmetry expansion for {label.value}")
    x = validate_overlap(x)
    eps = p.alpha - p.delta
    if label is CaseLabel.CASE2:
        anchor = p.alpha * x
    else:
        anchor = p.alpha * x + complex(p.beta).real
    return 1.0 - 0.25 * (1.0 - x * x) * eps * eps / (anchor * anchor)


def perturbative_t_star(label: CaseLabel, p: HamiltonianParams, x: float) -> float:
    """Second-order peak time in the small asymmetry alpha - delta.

    Two-term expansion around the matching optimal case (case 1 for
    case 2, case 5 for case 7), times pi hbar / (2E).
    """
    if label not in _PERTURBATIVE_LABELS:
        raise LabelMismatchError(f"no small-asymmetry expansion for {label.value}")
    x = validate_overlap(x)
    eps = p.alpha - p.delta
    if label is CaseLabel.CASE2:
        anchor = p.alpha * x
    else:
        anchor = p.alpha * x + complex(p.beta).real
    bracket = 1.0 / anchor - 0.125 * eps * eps / anchor**3
    return bracket * math.pi * p.hbar / (2.0 * p.energy_E)


def p_max_x_zero_limit(p: HamiltonianParams) -> float:
    """Peak success probability in the vanishing-overlap limit.

        4 |beta|^2 / ((alpha - delta)^2 + 4 |beta|^2)

    The 0/0 combination beta = 0, alpha = delta continues to 1 (the
    symmetric-diagonal family peaks at 1 for every positive overlap).
    """
    b_sq = abs(complex(p.beta)) ** 2
    den = (p.alpha - p.delta) ** 2 + 4.0 * b_sq
    if den == 0.0:
        return 1.0
    return 4.0 * b_sq / den


def fenner_params(energy_E: float, x: float, planck_h: float = 1.0) -> HamiltonianParams:
    """Purely imaginary coupling beta = 2ix with no diagonal terms.

    Classifies as case 4 with Re(beta) = 0, so the peak success
    probability is exactly 1 - x^2.
    """
    x = validate_overlap(x)
    return validate_params(
        alpha=0.0, delta=0.0, beta=2j * x, energy_E=energy_E, planck_h=planck_h
    )


def diagonal_speedup_condition(alpha: float, delta: float, x: float) -> bool:
    """True when the asymmetric diagonal Hamiltonian peaks no later than
    the symmetric one, i.e. when 0 <= delta / (1 - 4 x^2) <= alpha.

    Only meaningful for x != 1/2 (the expression blows up there).
    """
    x = validate_overlap(x)
    denom = 1.0 - 4.0 * x * x
    if denom == 0.0:
        raise ValidationError("condition undefined at x = 1/2")
    ratio = delta / denom
    return 0.0 <= ratio <= alpha
