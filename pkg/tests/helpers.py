"""Seeded draw utilities shared by the sweep-style tests."""

import numpy as np

import qsearch as q
from qsearch.cases import CaseLabel

SWEEP_SEED = 20260809


def make_rng(salt: int = 0) -> np.random.Generator:
    return np.random.default_rng(SWEEP_SEED + salt)


def draw_couplings(rng, real_beta: bool = False):
    """Unrestricted coupling draw used for algebraic identities.

    alpha, delta, Re(beta), Im(beta) ~ U[-2, 2]; x ~ U[0.05, 0.95]; E = h = 1.
    """
    alpha, delta = rng.uniform(-2.0, 2.0, 2)
    imag = 0.0 if real_beta else float(rng.uniform(-2.0, 2.0))
    beta = complex(rng.uniform(-2.0, 2.0), imag)
    x = float(rng.uniform(0.05, 0.95))
    return q.validate_params(alpha, delta, beta), x


def draw_search_regime(rng):
    """Positive real couplings: the regime where the closed sinusoid is the
    exact dynamics and its coefficient is the true peak."""
    alpha, delta = rng.uniform(0.05, 2.0, 2)
    beta = complex(rng.uniform(0.05, 2.0), 0.0)
    x = float(rng.uniform(0.05, 0.95))
    return q.validate_params(alpha, delta, beta), x


def draw_case(rng, label: CaseLabel):
    """Draw couplings satisfying one case's constraints (positive regime)."""
    x = float(rng.uniform(0.05, 0.95))
    if label is CaseLabel.CASE1:
        a = float(rng.uniform(0.1, 2.0))
        return q.validate_params(a, a, 0.0), x
    if label is CaseLabel.CASE2:
        a, d = rng.uniform(0.1, 2.0, 2)
        if abs(a - d) < 1e-3:
            d += 0.5
        return q.validate_params(float(a), float(d), 0.0), x
    if label is CaseLabel.CASE3:
        return q.validate_params(0.0, 0.0, complex(rng.uniform(0.1, 2.0), 0.0)), x
    if label is CaseLabel.CASE4:
        beta = complex(rng.uniform(-2.0, 2.0), rng.uniform(0.1, 2.0))
        return q.validate_params(0.0, 0.0, beta), x
    if label is CaseLabel.CASE5:
        a = float(rng.uniform(0.1, 2.0))
        return q.validate_params(a, a, complex(rng.uniform(0.1, 2.0), 0.0)), x
    if label is CaseLabel.CASE6:
        a = float(rng.uniform(0.1, 2.0))
        beta = complex(rng.uniform(-2.0, 2.0), rng.uniform(0.1, 2.0))
        return q.validate_params(a, a, beta), x
    if label is CaseLabel.CASE7:
        a, d = rng.uniform(0.1, 2.0, 2)
        if abs(a - d) < 1e-3:
            d += 0.5
        return q.validate_params(float(a), float(d), complex(rng.uniform(0.1, 2.0), 0.0)), x
    raise ValueError(f"no draw rule for {label}")


ALL_CASES = (
    CaseLabel.CASE1,
    CaseLabel.CASE2,
    CaseLabel.CASE3,
    CaseLabel.CASE4,
    CaseLabel.CASE5,
    CaseLabel.CASE6,
    CaseLabel.CASE7,
)
