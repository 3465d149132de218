import math

import pytest

import qsearch as q
from qsearch.cases import CaseLabel
from helpers import ALL_CASES, draw_case, make_rng

HBAR = 1.0 / (2.0 * math.pi)


class TestClassify:
    @pytest.mark.parametrize(
        "alpha,delta,beta,expected",
        [
            (1.0, 1.0, 0.0, CaseLabel.CASE1),
            (0.0, 0.0, 0.0, CaseLabel.CASE1),  # zero Hamiltonian
            (1.0, 2.0, 0.0, CaseLabel.CASE2),
            (0.0, 0.0, 0.5, CaseLabel.CASE3),
            (0.0, 0.0, 1.0j, CaseLabel.CASE4),
            (0.0, 0.0, 1.0 + 1.0j, CaseLabel.CASE4),
            (1.0, 1.0, 1.0, CaseLabel.CASE5),
            (1.0, 1.0, 1.0 + 1.0j, CaseLabel.CASE6),
            (1.0, 0.5, 1.0, CaseLabel.CASE7),
            (1.0, 2.0, 1.0 + 1.0j, CaseLabel.GENERAL),
        ],
    )
    def test_reference_labels(self, alpha, delta, beta, expected):
        assert q.classify(q.validate_params(alpha, delta, beta)) is expected

    def test_tolerance_boundaries(self):
        # residues below the classification tolerance collapse to the
        # more constrained case
        assert q.classify(q.validate_params(1.0, 1.0 + 1e-13, 0.0)) is CaseLabel.CASE1
        assert q.classify(q.validate_params(1.0, 1.0, 1e-13j)) is CaseLabel.CASE1
        assert q.classify(q.validate_params(1.0, 1.0, 1.0 + 1e-13j)) is CaseLabel.CASE5

    def test_sweep_draws_land_on_their_case(self):
        rng = make_rng(30)
        for label in ALL_CASES:
            for _ in range(100):
                p, _ = draw_case(rng, label)
                assert q.classify(p) is label


class TestCaseFormulas:
    def test_label_mismatch_rejected(self):
        p = q.validate_params(1.0, 1.0, 0.0)
        with pytest.raises(q.LabelMismatchError):
            q.case_p_max(CaseLabel.CASE3, p, 0.5)
        with pytest.raises(q.LabelMismatchError):
            q.case_t_star(CaseLabel.CASE2, p, 0.5)

    def test_asymmetric_diagonal_reference(self):
        p = q.validate_params(1.0, 0.5, 0.0)
        assert q.case_p_max(CaseLabel.CASE2, p, 0.5) == pytest.approx(0.75, rel=1e-12)

    def test_imaginary_coupling_peak_is_complement(self):
        # Re(beta) = 0 collapses the case-4 peak to 1 - x^2
        for x in (0.1, 0.5, 0.9):
            p = q.validate_params(0.0, 0.0, 1.5j)
            assert q.case_p_max(CaseLabel.CASE4, p, x) == pytest.approx(
                1.0 - x * x, rel=1e-12
            )

    def test_unit_peak_cases(self):
        rng = make_rng(31)
        for label in (CaseLabel.CASE1, CaseLabel.CASE3, CaseLabel.CASE5):
            for _ in range(50):
                p, x = draw_case(rng, label)
                assert q.case_p_max(label, p, x) == 1.0

    @pytest.mark.parametrize(
        "alpha,delta,beta,x,expected",
        [
            (1.0, 1.0, 0.0, 0.5, 0.5),    # 1/(alpha x) quarter-period
            (0.0, 0.0, 1.0, 0.5, 0.25),   # 1/beta, x-independent
            (1.0, 1.0, 1.0, 0.5, 1.0 / 6.0),
        ],
    )
    def test_reference_peak_times(self, alpha, delta, beta, x, expected):
        p = q.validate_params(alpha, delta, beta)
        assert q.case_t_star(q.classify(p), p, x) == pytest.approx(expected, rel=1e-12)

    def test_pure_coupling_peak_time_ignores_overlap(self):
        p = q.validate_params(0.0, 0.0, 1.0)
        times = {q.case_t_star(CaseLabel.CASE3, p, x) for x in (0.1, 0.4, 0.8)}
        assert len(times) == 1

    def test_specialization_sweep(self):
        # every case formula must reproduce the general machinery
        rng = make_rng(32)
        for label in ALL_CASES:
            for _ in range(200):
                p, x = draw_case(rng, label)
                general_p = q.p_max(p, x)
                general_t = q.t_star(p, x)
                assert q.case_p_max(label, p, x) == pytest.approx(
                    general_p, rel=1e-12
                )
                assert q.case_t_star(label, p, x) == pytest.approx(
                    general_t, rel=1e-12
                )

    def test_asymmetric_peak_approaches_one_at_large_overlap(self):
        rng = make_rng(33)
        for _ in range(50):
            p, _ = draw_case(rng, CaseLabel.CASE2)
            assert q.case_p_max(CaseLabel.CASE2, p, 1.0 - 1e-6) == pytest.approx(
                1.0, abs=1e-4
            )

    def test_unit_peak_time_ordering(self):
        # with alpha = beta = 1: combined coupling beats pure coupling
        # beats pure diagonal for every overlap
        h1 = q.validate_params(1.0, 1.0, 0.0)
        h3 = q.validate_params(0.0, 0.0, 1.0)
        h5 = q.validate_params(1.0, 1.0, 1.0)
        for x in [0.05 + 0.05 * i for i in range(19)]:
            t1 = q.case_t_star(CaseLabel.CASE1, h1, x)
            t3 = q.case_t_star(CaseLabel.CASE3, h3, x)
            t5 = q.case_t_star(CaseLabel.CASE5, h5, x)
            assert t5 <= t3 <= t1


class TestPerturbative:
    def test_zero_asymmetry_collapses(self):
        p2 = q.validate_params(1.0, 1.0, 0.0)
        assert q.perturbative_p_max(CaseLabel.CASE2, p2, 0.5) == 1.0
        assert q.perturbative_t_star(CaseLabel.CASE2, p2, 0.5) == pytest.approx(
            0.5, rel=1e-12
        )
        p7 = q.validate_params(1.0, 1.0, 1.0)
        assert q.perturbative_p_max(CaseLabel.CASE7, p7, 0.5) == 1.0
        assert q.perturbative_t_star(CaseLabel.CASE7, p7, 0.5) == pytest.approx(
            1.0 / 6.0, rel=1e-12
        )

    def test_reference_expansion_value(self):
        p = q.validate_params(1.0, 0.99, 0.0)
        assert q.perturbative_p_max(CaseLabel.CASE2, p, 0.5) == pytest.approx(
            0.999925, rel=1e-12
        )

    @pytest.mark.parametrize("label,beta", [(CaseLabel.CASE2, 0.0), (CaseLabel.CASE7, 1.0)])
    def test_third_order_error_ratio(self, label, beta):
        # |exact - expansion| / eps^3 must stay O(1) as eps shrinks
        x = 0.5
        ratios_p = []
        ratios_t = []
        for eps in (1e-2, 1e-3, 1e-4):
            p = q.validate_params(1.0, 1.0 - eps, beta)
            exact_label = q.classify(p)
            exact_p = q.case_p_max(exact_label, p, x)
            exact_t = q.case_t_star(exact_label, p, x)
            ratios_p.append(abs(exact_p - q.perturbative_p_max(label, p, x)) / eps**3)
            ratios_t.append(abs(exact_t - q.perturbative_t_star(label, p, x)) / eps**3)
        for ratios in (ratios_p, ratios_t):
            assert max(ratios) > 0.0
            assert max(ratios) / max(min(ratios), 1e-300) < 10.0

    def test_unsupported_label_rejected(self):
        p = q.validate_params(1.0, 1.0, 0.0)
        with pytest.raises(q.LabelMismatchError):
            q.perturbative_p_max(CaseLabel.CASE1, p, 0.5)


class TestVanishingOverlapLimit:
    def test_symmetric_is_unit(self):
        assert q.p_max_x_zero_limit(q.validate_params(1.0, 1.0, 0.5j)) == 1.0
        assert q.p_max_x_zero_limit(q.validate_params(0.0, 0.0, 0.0)) == 1.0

    def test_reference_value(self):
        p = q.validate_params(1.0, 0.0, 0.5)
        assert q.p_max_x_zero_limit(p) == pytest.approx(0.5, rel=1e-12)

    def test_diagonal_asymmetry_kills_the_peak(self):
        assert q.p_max_x_zero_limit(q.validate_params(1.0, 0.25, 0.0)) == 0.0

    def test_small_overlap_consistency(self):
        # the limit must agree with the full formula evaluated at tiny x
        rng = make_rng(34)
        for _ in range(100):
            alpha, delta = rng.uniform(-2.0, 2.0, 2)
            beta = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
            if abs(beta) < 0.05:
                continue
            p = q.validate_params(float(alpha), float(delta), beta)
            assert q.p_max(p, 1e-8) == pytest.approx(
                q.p_max_x_zero_limit(p), abs=1e-6
            )


class TestFenner:
    def test_construction_and_classification(self):
        p = q.fenner_params(1.0, 0.5)
        assert p.beta == 1.0j
        assert q.classify(p) is CaseLabel.CASE4

    @pytest.mark.parametrize("x,expected", [(0.5, 0.75), (0.1, 0.99)])
    def test_peak_is_complement_of_overlap_squared(self, x, expected):
        p = q.fenner_params(1.0, x)
        assert q.case_p_max(CaseLabel.CASE4, p, x) == pytest.approx(expected, rel=1e-12)

    def test_small_overlap_peak_time_approaches_pure_coupling(self):
        # t* = (quarter period)/|beta| * (1 + x^2/2 + O(x^4)); ratio test
        ratios = []
        for x in (0.1, 0.03, 0.01):
            beta = 1.5j
            p = q.validate_params(0.0, 0.0, beta)
            t4 = q.case_t_star(CaseLabel.CASE4, p, x)
            t3_equivalent = (math.pi * p.hbar / (2.0 * p.energy_E)) / abs(beta)
            ratios.append((t4 - t3_equivalent) / (x * x))
        assert max(ratios) / min(ratios) < 1.5


class TestDiagonalSpeedupCondition:
    def test_reference_truth_values(self):
        assert q.diagonal_speedup_condition(2.0, 1.0, 0.3) is True
        assert q.diagonal_speedup_condition(0.5, 1.0, 0.3) is False

    def test_condition_implies_ordering(self):
        # whenever the predicate holds (x < 1/2), the asymmetric diagonal
        # Hamiltonian peaks no later than the symmetric-diagonal one
        rng = make_rng(35)
        checked = 0
        for _ in range(500):
            alpha, delta = rng.uniform(0.05, 2.0, 2)
            x = float(rng.uniform(0.05, 0.45))
            if not q.diagonal_speedup_condition(float(alpha), float(delta), x):
                continue
            h1 = q.validate_params(float(alpha), float(alpha), 0.0)
            t1 = q.case_t_star(CaseLabel.CASE1, h1, x)
            if abs(alpha - delta) < 1e-9:
                continue
            h2 = q.validate_params(float(alpha), float(delta), 0.0)
            t2 = q.case_t_star(CaseLabel.CASE2, h2, x)
            assert t1 >= t2 - 1e-12
            checked += 1
        assert checked > 50

    def test_undefined_at_half(self):
        with pytest.raises(q.ValidationError):
            q.diagonal_speedup_condition(1.0, 0.5, 0.5)
