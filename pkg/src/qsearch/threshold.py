"""Speed-fidelity tradeoff: earliest time to hit a success threshold.

Because the success probability is the pure sinusoid
P(t) = x^2 + (P_max - x^2) sin^2(a t / hbar), the first crossing of a
reachable threshold inverts analytically:

    t_hit = (hbar / a) * arcsin(sqrt((thr - x^2) / (P_max - x^2)))

A Hamiltonian with a lower peak can still cross a high threshold sooner
than one that peaks at 1 -- the head-to-head comparison below quantifies
exactly that.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .dynamics import NoOscillation, search_outcome
from .errors import InvalidThresholdError
from .hamiltonian import HamiltonianParams, validate_overlap

# Margin above the peak below which a threshold still counts as reachable,
# so thr = P_max never false-negatives to "unreachable" in floating point.
UNREACHABLE_MARGIN = 1e-12


@dataclass(frozen=True)
class ThresholdResult:
    reachable: bool
    t_hit: float | None
    p_max: float
    t_star: float | NoOscillation


class Winner(Enum):
    A = "a"
    B = "b"
    TIE = "tie"
    NEITHER = "neither"


@dataclass(frozen=True)
class ComparisonReport:
    params_a: HamiltonianParams
    params_b: HamiltonianParams
    threshold: float
    result_a: ThresholdResult
    result_b: ThresholdResult
    winner: Winner


def time_to_threshold(
    p: HamiltonianParams, x: float, thr: float
) -> ThresholdResult:
    """Earliest time at which P(t) reaches thr, if it ever does.

    thr <= x^2 is hit at t = 0; thr above the peak (beyond a 1e-12 margin)
    is unreachable.  For reachable thresholds the arcsine inversion lands
    on the first rising branch, so 0 <= t_hit <= t*.
    """
    x = validate_overlap(x)
    thr = float(thr)
    if not (math.isfinite(thr) and 0.0 <= thr <= 1.0):
        raise InvalidThresholdError(f"threshold must be in [0, 1], got {thr!r}")

    out = search_outcome(p, x)
    pm, ts = out.p_max, out.t_star

    if thr <= x * x:
        return ThresholdResult(reachable=True, t_hit=0.0, p_max=pm, t_star=ts)
    if isinstance(ts, NoOscillation) or thr > pm + UNREACHABLE_MARGIN:
        return ThresholdResult(reachable=False, t_hit=None, p_max=pm, t_star=ts)

    ratio = (thr - x * x) / (pm - x * x)
    t_hit = (p.hbar / out.gap_a) * math.asin(math.sqrt(min(ratio, 1.0)))
    return ThresholdResult(reachable=True, t_hit=t_hit, p_max=pm, t_star=ts)


def compare_speed(
    pa: HamiltonianParams, pb: HamiltonianParams, x: float, thr: float
) -> ComparisonReport:
    """Race two Hamiltonians to the same threshold; smaller t_hit wins."""
    ra = time_to_threshold(pa, x, thr)
    rb = time_to_threshold(pb, x, thr)
    if not ra.reachable and not rb.reachable:
        winner = Winner.NEITHER
    elif not rb.reachable:
        winner = Winner.A
    elif not ra.reachable:
        winner = Winner.B
    elif abs(ra.t_hit - rb.t_hit) <= 1e-12:
        winner = Winner.TIE
    elif ra.t_hit < rb.t_hit:
        winner = Winner.A
    else:
        winner = Winner.B
    return ComparisonReport(
        params_a=pa,
        params_b=pb,
        threshold=thr,
        result_a=ra,
        result_b=rb,
        winner=winner,
    )
