"""Digital (Grover) and analog (Farhi-Gutmann) reference search algorithms."""

import math

from .errors import ValidationError
from .hamiltonian import validate_overlap


def _check_n_items(n_items: int) -> int:
    n = int(n_items)
    if n != n_items or n < 2:
        raise ValidationError(f"database size must be an integer >= 2, got {n_items!r}")
    return n


def grover_probability(k: int, n_items: int) -> float:
    """Success probability after k applications of the Grover iterate:

        sin^2((2k + 1) * arctan(1 / sqrt(N - 1)))

    k = 0 gives the bare initial overlap 1/N.
    """
    n = _check_n_items(n_items)
    if int(k) != k or k < 0:
        raise ValidationError(f"iteration count must be an integer >= 0, got {k!r}")
    angle = math.atan(1.0 / math.sqrt(n - 1.0))
    return math.sin((2 * int(k) + 1) * angle) ** 2


def grover_optimal_k(n_items: int) -> int:
    """Iteration count maximizing the Grover success probability.

    Evaluates the two integers bracketing pi / (4 arctan(1/sqrt(N-1))) - 1/2
    and keeps the better one; on a tie the smaller count wins (fewer
    queries at equal probability).
    """
    n = _check_n_items(n_items)
    angle = math.atan(1.0 / math.sqrt(n - 1.0))
    k_real = math.pi / (4.0 * angle) - 0.5
    k_lo = max(0, math.floor(k_real))
    k_hi = k_lo + 1
    p_lo = grover_probability(k_lo, n)
    p_hi = grover_probability(k_hi, n)
    if p_lo >= p_hi - 1e-12:
        return k_lo
    return k_hi


def farhi_gutmann_probability(
    t: float, x: float, energy_E: float = 1.0, planck_h: float = 1.0
) -> float:
    """Success probability of the constant analog search Hamiltonian:

        sin^2(E x t / hbar) + x^2 cos^2(E x t / hbar)

    which first reaches 1 at t = h / (4 E x).
    """
    x = validate_overlap(x)
    t = float(t)
    if not (math.isfinite(t) and t >= 0.0):
        raise ValidationError(f"time must be finite and >= 0, got {t!r}")
    hbar = planck_h / (2.0 * math.pi)
    phase = energy_E * x * t / hbar
    return math.sin(phase) ** 2 + x * x * math.cos(phase) ** 2
