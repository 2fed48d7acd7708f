import math

import numpy as np
import pytest

from deformspec import (
    DecayModel,
    ResolutionError,
    ValidationError,
    asymptotic_coefficient,
    asymptotics_report,
    canonical_params,
    constant_coefficient_report,
    convergence_study,
    default_projection_rule,
    deformation_profile,
    eigenfunction,
    gauss_legendre_rule,
    inverse_limit_report,
    inverse_limit_trajectory,
    rigidity_partial_sum,
    rigidity_report,
    uniform_grid,
)

CANON = canonical_params()


class TestAsymptotics:
    def test_identity_band(self):
        report = asymptotics_report(CANON, 100, 1000)
        assert report.verdict == "pass"
        alpha = report.inputs["alpha"]
        ns = np.array(report.series["n"])
        ratio = np.array(report.series["abs_remainder_over_n"])
        assert np.all(np.abs(ratio - 2 * alpha) <= alpha / ns + 1e-9 * alpha)

    def test_ratio_convergence_low_range(self):
        report = asymptotics_report(CANON, 10, 20)
        alpha = asymptotic_coefficient(CANON)
        cn = np.array(report.series["eigenvalue"])
        ns = np.array(report.series["n"], dtype=float)
        # C_n / (-alpha n^2) -> 1; within 25% by n = 20
        assert abs(cn[-1] / (-alpha * ns[-1] ** 2) - 1.0) < 0.25

    def test_all_below_pi(self):
        report = asymptotics_report(CANON, 1, 50)
        assert np.all(np.array(report.series["eigenvalue"]) < math.pi)

    def test_range_validation(self):
        with pytest.raises(ValidationError):
            asymptotics_report(CANON, 0, 10)
        with pytest.raises(ValidationError):
            asymptotics_report(CANON, 10, 10)


class TestRigidity:
    def test_partial_sum_endpoints_vanish(self):
        grid = uniform_grid(CANON, 256)
        for n in (0, 9, 64):
            partial = rigidity_partial_sum(CANON, n, grid)
            assert partial.values[0] == 0.0
            assert partial.values[-1] == 0.0

    def test_partial_sum_norm_parseval(self):
        rule = gauss_legendre_rule(CANON, 512)
        grid = uniform_grid(CANON, 512)
        partial = rigidity_partial_sum(CANON, 9, grid)
        # Parseval with ten coefficients equal to pi
        from deformspec import evaluate, CoefficientVector

        values = evaluate(CoefficientVector(CANON, np.full(10, math.pi)), rule.nodes)
        norm_sq = float(np.dot(rule.weights, values**2))
        assert norm_sq == pytest.approx(math.pi**2 * 10, abs=1e-8)

    def test_report_passes(self):
        report = rigidity_report(CANON, [8, 16, 32, 64])
        assert report.verdict == "pass"
        assert all(g >= math.pi - 1e-9 for g in report.series["boundary_gap"])
        ratios = np.array(report.series["norm_sq"]) / (np.array(report.series["n"]) + 1)
        np.testing.assert_allclose(ratios, math.pi**2, atol=1e-8)

    def test_single_entry(self):
        report = rigidity_report(CANON, [0])
        assert report.series["norm_sq"][0] == pytest.approx(math.pi**2, abs=1e-10)

    def test_distance_to_target_grows(self):
        report = rigidity_report(CANON, [8, 16, 32, 64])
        distance = report.series["l2_distance_to_pi"]
        assert all(b > a for a, b in zip(distance, distance[1:]))
        # closed form: pi^2 (N+1) - 8 pi sqrt(v_c) H_odd(N+1) + 2 pi^2 v_c
        for n, value in zip(report.series["n"], distance):
            h_odd = sum(1.0 / m for m in range(1, n + 2) if m % 2 == 1)
            closed = math.pi**2 * (n + 1) - 8 * math.pi * math.sqrt(CANON.v_c) * h_odd + 2 * math.pi**2 * CANON.v_c
            assert value**2 == pytest.approx(closed, rel=1e-9)

    def test_needs_increasing_list(self):
        with pytest.raises(ValidationError):
            rigidity_report(CANON, [16, 8])


class TestConstantCoefficients:
    def test_two_rules_agree_with_closed_form(self):
        report = constant_coefficient_report(CANON, 32)
        assert report.verdict == "documented_discrepancy"
        closed = np.array(report.series["closed_form"])
        for column in ("gauss_legendre", "composite_simpson"):
            assert np.max(np.abs(np.array(report.series[column]) - closed)) < 1e-10

    def test_even_modes_nonzero_odd_modes_zero(self):
        report = constant_coefficient_report(CANON, 8)
        closed = report.series["closed_form"]
        assert closed[0] == pytest.approx(4 * math.sqrt(CANON.v_c) / math.pi, rel=1e-14)
        assert all(closed[n] == 0.0 for n in (1, 3, 5, 7))
        assert all(closed[n] > 0.1 for n in (0, 2, 4))


class TestInverseLimit:
    def test_trajectory_far_in_time_is_uniform_sum(self):
        model = DecayModel(amplitude=1.0, decay_rate=1.0, n_max=8)
        grid = uniform_grid(CANON, 600)
        far = inverse_limit_trajectory(model, CANON, 50.0, grid)
        uniform = rigidity_partial_sum(CANON, 8, grid)
        assert np.max(np.abs(far.values - uniform.values)) < math.exp(-50) * 20 + 1e-12

    def test_trajectory_zero_amplitude_is_uniform_sum(self):
        model = DecayModel(amplitude=0.0, decay_rate=1.0, n_max=8)
        grid = uniform_grid(CANON, 600)
        np.testing.assert_array_equal(
            inverse_limit_trajectory(model, CANON, 3.0, grid).values,
            rigidity_partial_sum(CANON, 8, grid).values,
        )

    def test_initial_deviation_bounded_by_geometric_sum(self):
        model = DecayModel(amplitude=1.0, decay_rate=2.0, n_max=32)
        grid = uniform_grid(CANON, 64 * 33)
        at_zero = inverse_limit_trajectory(model, CANON, 0.0, grid)
        uniform = rigidity_partial_sum(CANON, 32, grid)
        deviation = np.max(np.abs(at_zero.values - uniform.values))
        bound = (1 - math.exp(-33)) / (1 - math.exp(-1)) / math.sqrt(CANON.v_c)
        assert deviation <= bound * (1 + 1e-12)
        assert bound == pytest.approx(1.741, abs=1e-3)

    def test_report_slopes_match_decay_rate(self):
        model = DecayModel(amplitude=1.0, decay_rate=2.0, n_max=32)
        grid = uniform_grid(CANON, 64 * 33)
        report = inverse_limit_report(model, CANON, list(range(1, 9)), 2, grid)
        assert report.verdict == "pass"
        for slope in report.series["fitted_slope"]:
            assert abs(slope + 2.0) <= 0.05 * 2.0

    def test_k0_factorization_exact(self):
        model = DecayModel(amplitude=1.0, decay_rate=2.0, n_max=32)
        grid = uniform_grid(CANON, 64 * 33)
        report = inverse_limit_report(model, CANON, [1.0, 2.0, 3.0], 0, grid)
        s = report.series["seminorm_k0"]
        assert s[1] / s[0] == pytest.approx(math.exp(-2.0), rel=1e-9)
        assert s[2] / s[1] == pytest.approx(math.exp(-2.0), rel=1e-9)

    def test_constant_weights_factor_through_sup(self):
        model = DecayModel(amplitude=1.0, decay_rate=2.0, n_max=32, mode_weights=lambda n: np.ones(np.shape(n)))
        grid = uniform_grid(CANON, 64 * 33)
        report = inverse_limit_report(model, CANON, [0.0, 1.0, 2.0], 0, grid)
        uniform_sup = np.max(np.abs(rigidity_partial_sum(CANON, 32, grid).values / math.pi))
        assert report.series["seminorm_k0"][0] == pytest.approx(uniform_sup, rel=1e-12)
        assert report.series["fitted_slope"][0] == pytest.approx(-2.0, abs=1e-9)

    def test_degenerate_fit_rejected(self):
        model = DecayModel(amplitude=1.0, decay_rate=2.0, n_max=4)
        grid = uniform_grid(CANON, 512)
        with pytest.raises(ValidationError, match="degenerate fit"):
            inverse_limit_report(model, CANON, [2.0, 2.0, 2.0], 0, grid)

    def test_under_resolved_grid_rejected(self):
        model = DecayModel(amplitude=1.0, decay_rate=2.0, n_max=32)
        with pytest.raises(ResolutionError):
            inverse_limit_report(model, CANON, [1.0, 2.0, 3.0], 3, uniform_grid(CANON, 64 * 33))

    def test_model_validation(self):
        with pytest.raises(ValidationError):
            DecayModel(amplitude=1.0, decay_rate=0.0, n_max=4)
        with pytest.raises(ValidationError):
            DecayModel(amplitude=1.0, decay_rate=1.0, n_max=4, mode_weights=lambda n: 2.0 * np.ones(np.shape(n)))


class TestConvergenceStudy:
    def test_profile_errors_decrease(self):
        rule = default_projection_rule(CANON, 128)
        report = convergence_study(
            CANON, lambda v: deformation_profile(CANON, v), [8, 16, 32, 64, 128], rule
        )
        assert report.verdict == "pass"
        l2 = report.series["l2_error"]
        assert all(b < a for a, b in zip(l2, l2[1:]))
        # frozen from the closed-form tail: sqrt(||C||^2 - sum a_n^2)
        np.testing.assert_allclose(
            l2, [0.259745, 0.193065, 0.140348, 0.100707, 0.071751], atol=2e-5
        )
        sup = report.series["interior_sup_error"]
        assert all(b <= a + 1e-9 for a, b in zip(sup, sup[1:]))

    def test_in_span_target_error_vanishes(self):
        rule = gauss_legendre_rule(CANON, 256)
        report = convergence_study(CANON, lambda v: eigenfunction(CANON, 4, v), [4, 8], rule)
        assert report.verdict == "pass"
        assert all(e < 1e-9 for e in report.series["l2_error"])

    def test_smooth_target_beats_profile(self):
        def cubed_sine(v):
            return np.sin(math.pi * (np.asarray(v) + CANON.v_c) / (2 * CANON.v_c)) ** 3

        rule = default_projection_rule(CANON, 32)
        smooth = convergence_study(CANON, cubed_sine, [8, 16, 32], rule)
        rough = convergence_study(CANON, lambda v: deformation_profile(CANON, v), [8, 16, 32], rule)
        for a, b in zip(smooth.series["l2_error"], rough.series["l2_error"]):
            assert a < b

    def test_needs_increasing_list(self):
        with pytest.raises(ValidationError):
            convergence_study(CANON, lambda v: np.ones_like(v), [8, 8], gauss_legendre_rule(CANON, 256))


def test_report_shape():
    report = rigidity_report(CANON, [2, 4])
    assert set(("name", "inputs", "tolerances", "series", "verdict")) <= set(vars(report))
    assert report.tolerances  # every verdict is justified by a tolerance entry
    assert all(len(report.series["n"]) == len(col) for col in report.series.values())
