import math

import numpy as np
import pytest

import qsearch as q
from qsearch.overlap_prior import adaptive_quad
from helpers import make_rng

X_BAR = math.cos(math.pi / 8.0)
MU = 3.0 * math.pi / 8.0

# Printed three-significant-digit reference values for the overlap-bound
# probabilities at x_bar = cos(pi/8), mu = 3 pi / 8.
UNIFORM_REFERENCE = {4: 3.72e-4, 8: 1.20e-7, 16: 1.79e-14}
NONUNIFORM_REFERENCE = {
    (4, 0.1): 6.86e-3, (4, 1.0): 14.55e-2, (4, 10.0): 19.07e-2,
    (8, 0.1): 6.91e-3, (8, 1.0): 14.72e-2, (8, 10.0): 19.28e-2,
    (16, 0.1): 6.92e-3, (16, 1.0): 14.74e-2, (16, 10.0): 19.31e-2,
}


class TestAdaptiveQuad:
    def test_polynomial_is_exact(self):
        assert adaptive_quad(lambda t: 3.0 * t**2, 0.0, 2.0) == pytest.approx(
            8.0, rel=1e-13
        )

    def test_empty_interval(self):
        assert adaptive_quad(np.sin, 1.0, 1.0) == 0.0

    def test_sharp_feature_is_resolved(self):
        # narrow Gaussian spike: needs subdivision, known integral
        center, width = 0.3, 1e-4
        value = adaptive_quad(
            lambda t: np.exp(-((t - center) ** 2) / (2.0 * width**2)), 0.0, 1.0
        )
        expected = width * math.sqrt(2.0 * math.pi)
        assert value == pytest.approx(expected, rel=1e-9)

    def test_budget_exhaustion_raises(self):
        with pytest.raises(q.QuadratureFailureError):
            adaptive_quad(
                lambda t: np.exp(-((t - 0.3) ** 2) / (2.0 * 1e-5**2)),
                0.0,
                1.0,
                max_panels=3,
            )


class TestTargetDensity:
    def test_peak_value_without_damping(self):
        spec = q.PriorSpec(hilbert_dim_n=2, mu_theta=0.0, sigma_sq=1.0)
        assert q.target_density(0.0, spec) == pytest.approx(1.0, rel=1e-15)

    def test_equator_value(self):
        spec = q.PriorSpec(hilbert_dim_n=4, mu_theta=0.0, sigma_sq=1.0)
        expected = math.exp(-math.pi**2 / 8.0) / (1.0 + 10.0**6)
        assert q.target_density(math.pi / 2.0, spec) == pytest.approx(expected, rel=1e-12)

    def test_positive_everywhere(self):
        spec = q.PriorSpec(hilbert_dim_n=16, mu_theta=MU, sigma_sq=0.1)
        theta = np.linspace(0.0, math.pi / 2.0, 500)
        assert np.all(q.target_density(theta, spec) > 0.0)

    def test_spec_validation(self):
        with pytest.raises(q.ValidationError):
            q.PriorSpec(hilbert_dim_n=1, mu_theta=0.0, sigma_sq=1.0)
        with pytest.raises(q.ValidationError):
            q.PriorSpec(hilbert_dim_n=4, mu_theta=2.0, sigma_sq=1.0)
        with pytest.raises(q.ValidationError):
            q.PriorSpec(hilbert_dim_n=4, mu_theta=0.5, sigma_sq=0.0)


class TestUniformPrior:
    @pytest.mark.parametrize("n,expected", sorted(UNIFORM_REFERENCE.items()))
    def test_reference_values(self, n, expected):
        assert q.uniform_prob_overlap(X_BAR, n) == pytest.approx(expected, rel=0.02)

    def test_full_and_empty_bounds(self):
        for n in (2, 4, 16):
            assert q.uniform_prob_overlap(0.0, n) == 1.0
            assert q.uniform_prob_overlap(1.0, n) == 0.0

    def test_analytic_and_quadrature_routes_agree(self):
        # uniform_prob_overlap already cross-checks internally to 1e-10 and
        # raises on disagreement; exercise it across dimensions and bounds
        for n in (2, 4, 8, 16):
            for x_bar in np.linspace(0.0, 1.0, 20):
                value = q.uniform_prob_overlap(float(x_bar), n)
                assert 0.0 <= value <= 1.0

    def test_nonincreasing_in_bound(self):
        values = [q.uniform_prob_overlap(float(xb), 8) for xb in np.linspace(0, 1, 30)]
        assert all(a >= b - 1e-15 for a, b in zip(values, values[1:]))


class TestNonuniformPrior:
    @pytest.mark.parametrize("key,expected", sorted(NONUNIFORM_REFERENCE.items()))
    def test_reference_values(self, key, expected):
        n, sigma_sq = key
        spec = q.PriorSpec(hilbert_dim_n=n, mu_theta=MU, sigma_sq=sigma_sq)
        assert q.prob_overlap_at_least(X_BAR, spec) == pytest.approx(expected, rel=0.03)

    def test_full_and_empty_bounds(self):
        spec = q.PriorSpec(hilbert_dim_n=4, mu_theta=MU, sigma_sq=1.0)
        assert q.prob_overlap_at_least(0.0, spec) == 1.0
        assert q.prob_overlap_at_least(1.0, spec) == 0.0

    def test_nonincreasing_in_bound(self):
        spec = q.PriorSpec(hilbert_dim_n=8, mu_theta=MU, sigma_sq=1.0)
        values = [
            q.prob_overlap_at_least(float(xb), spec) for xb in np.linspace(0, 1, 25)
        ]
        assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))

    def test_density_scale_invariance(self):
        # the ratio of integrals kills any constant factor in the density:
        # scaling the variance-matched integrand by hand must not move it
        spec = q.PriorSpec(hilbert_dim_n=4, mu_theta=MU, sigma_sq=1.0)
        power = 2 * spec.hilbert_dim_n - 2
        theta_bar = math.acos(X_BAR)

        def weighted(scale):
            def f(theta):
                return scale * q.target_density(theta, spec) * np.sin(theta) ** power

            return adaptive_quad(f, 0.0, theta_bar) / adaptive_quad(
                f, 0.0, math.pi / 2.0
            )

        assert weighted(1.0) == pytest.approx(weighted(7.3e5), rel=1e-10)
        assert weighted(1.0) == pytest.approx(weighted(1.9e-6), rel=1e-10)

    def test_matches_reference_quadrature(self):
        # cross-check the in-package quadrature against an external adaptive
        # integrator on a handful of rows
        from scipy import integrate

        rng = make_rng(60)
        for _ in range(4):
            n = int(rng.choice([4, 8, 16]))
            sigma_sq = float(rng.choice([0.1, 1.0, 10.0]))
            spec = q.PriorSpec(hilbert_dim_n=n, mu_theta=MU, sigma_sq=sigma_sq)
            power = 2 * n - 2

            def f(theta):
                return q.target_density(theta, spec) * math.sin(theta) ** power

            num, _ = integrate.quad(f, 0.0, math.acos(X_BAR), epsabs=1e-14, epsrel=1e-11, limit=300)
            den, _ = integrate.quad(f, 0.0, math.pi / 2.0, epsabs=1e-14, epsrel=1e-11, limit=300)
            assert q.prob_overlap_at_least(X_BAR, spec) == pytest.approx(
                num / den, rel=1e-8
            )
