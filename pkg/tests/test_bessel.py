"""Tests for Bessel functions, their first zeros and the Omega profile."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from steincert.errors import DomainError, VerificationError
from steincert.services import BesselService

CLAIM_B_FLOOR = -0.45


class TestBesselJ:

    def test_order_zero_at_origin(self):
        assert BesselService.bessel_j(0, 0.0) == 1.0

    def test_positive_order_at_origin(self):
        assert BesselService.bessel_j(2.5, 0.0) == 0.0

    def test_recurrence(self):
        t = np.linspace(0.1, 30.0, 300)
        for nu in np.arange(1.0, 9.5, 0.5):
            lhs = np.array([BesselService.bessel_j(nu - 1, x) + BesselService.bessel_j(nu + 1, x)
                            for x in t])
            rhs = np.array([2 * nu / x * BesselService.bessel_j(nu, x) for x in t])
            assert_allclose(lhs, rhs, rtol=0, atol=1e-9)

    def test_order_out_of_range(self):
        with pytest.raises(DomainError, match='order'):
            BesselService.bessel_j(12, 1.0)

    def test_argument_out_of_range(self):
        with pytest.raises(DomainError, match='argument'):
            BesselService.bessel_j(0, 300.0)


class TestFirstZero:

    def test_order_zero(self):
        assert BesselService.first_positive_zero(0).value == pytest.approx(2.404825557695773, abs=1e-10)

    def test_order_one(self):
        assert BesselService.first_positive_zero(1).value == pytest.approx(3.831705970207512, abs=1e-10)

    def test_increasing_in_order(self):
        zeros = [BesselService.first_positive_zero(nu).value for nu in np.arange(0.0, 11.0, 0.5)]
        assert np.all(np.diff(zeros) > 0)

    def test_residual_recorded(self):
        zero = BesselService.first_positive_zero(3.5)
        assert abs(zero.residual) <= 1e-10
        assert zero.to_dict()['order'] == 3.5

    def test_landau_value(self):
        j = BesselService.first_positive_zero(1).value
        assert BesselService.bessel_j(0, j) == pytest.approx(-0.4027593957025531, abs=1e-9)


class TestOmega:

    def test_order_zero_is_j0(self):
        assert BesselService.omega(0, 1.0) == pytest.approx(0.7651976865579666, abs=1e-12)

    def test_near_origin(self):
        assert BesselService.omega(3, 1e-6) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize('alpha', [0, 0.5, 1, 3, 7])
    def test_derivative_finite_differences(self, alpha):
        h = 1e-6
        for t in (0.5, 2.0, 7.5, 20.0):
            numeric = (BesselService.omega(alpha, t + h) - BesselService.omega(alpha, t - h)) / (2 * h)
            assert BesselService.omega_derivative(alpha, t) == pytest.approx(numeric, abs=1e-7)

    @pytest.mark.parametrize('alpha', [0, 0.5, 2, 7])
    def test_inverse(self, alpha):
        lowest = BesselService.claim_b_minimum(alpha).min_value
        for level in (0.99, 0.5, 0.0, 0.5 * lowest):
            x = BesselService.omega_inverse(alpha, level)
            assert 0 < x < BesselService.first_positive_zero(alpha + 1).value
            assert BesselService.omega(alpha, x) == pytest.approx(level, abs=1e-12)

    def test_inverse_level_out_of_range(self):
        with pytest.raises(DomainError, match='Level'):
            BesselService.omega_inverse(0, -0.5)

    def test_zero_argument_rejected(self):
        with pytest.raises(DomainError):
            BesselService.omega(0, 0.0)

    def test_negative_alpha_rejected(self):
        with pytest.raises(DomainError, match='alpha'):
            BesselService.omega(-1, 1.0)


class TestEnvelope:

    def test_table_branch(self):
        x = BesselService.omega_decay_point(0, 0.1)
        assert x < 200
        grid = np.linspace(x, 200.0, 20000)
        assert np.max(np.abs([BesselService.omega(0, y) for y in grid])) < 0.1 + 1e-5
        assert BesselService.omega_envelope(0, x - 1.0) >= 0.1

    @pytest.mark.parametrize('alpha,level', [(0, 0.01), (1, 1e-4), (3, 1e-7)])
    def test_tail_branch(self, alpha, level):
        x = BesselService.omega_decay_point(alpha, level)
        assert x > 200
        assert BesselService.omega_envelope(alpha, x) == pytest.approx(level, rel=1e-6)

    def test_envelope_is_nonincreasing(self):
        xs = np.linspace(0.5, 400.0, 500)
        values = [BesselService.omega_envelope(2, x) for x in xs]
        assert np.all(np.diff(values) <= 1e-15)

    def test_level_above_one(self):
        assert BesselService.omega_decay_point(1, 1.5) == 0.0

    def test_nonpositive_level(self):
        with pytest.raises(DomainError, match='positive'):
            BesselService.omega_decay_point(1, 0.0)


class TestClaimB:

    def test_order_zero_minimum(self):
        profile = BesselService.claim_b_minimum(0)
        assert profile.min_value == pytest.approx(-0.4027593957025531, abs=1e-9)
        assert profile.min_location == pytest.approx(3.831705970207512, abs=1e-8)

    @pytest.mark.parametrize('alpha', [0, 2, 7])
    def test_minimum_is_stationary(self, alpha):
        profile = BesselService.claim_b_minimum(alpha)
        assert BesselService.omega_derivative(alpha, profile.min_location) == pytest.approx(0, abs=1e-12)

    @pytest.mark.parametrize('alpha', [0, 1.5, 5, 10])
    def test_minimum_against_dense_grid(self, alpha):
        profile = BesselService.claim_b_minimum(alpha)
        dense = min(BesselService.omega(alpha, t) for t in np.linspace(1e-3, 40.0, 40001))
        assert profile.min_value <= dense + 1e-9
        assert profile.min_value >= CLAIM_B_FLOOR

    def test_minimum_increases_with_alpha(self):
        values = [BesselService.claim_b_minimum(a).min_value for a in (0, 1, 2, 4, 8)]
        assert np.all(np.diff(values) > 0)

    def test_bound_violation_raises(self):
        with pytest.raises(VerificationError, match='below'):
            BesselService.claim_b_minimum(0, bound=-0.4)

    def test_sweep(self):
        report = BesselService.claim_b_sweep()
        assert report['ok']
        assert report['zeros_increasing']
        assert report['landau_monotone']
        assert len(report['rows']) == 33
        assert all(row['omega_min'] >= CLAIM_B_FLOOR for row in report['rows'])

    def test_sweep_reports_unordered_zeros(self):
        report = BesselService.claim_b_sweep(alphas=[1.0, 0.0], strict=False)
        assert report['claim_b_ok']
        assert not report['zeros_increasing']
        assert not report['ok']
        with pytest.raises(VerificationError, match='sweep'):
            BesselService.claim_b_sweep(alphas=[1.0, 0.0])
