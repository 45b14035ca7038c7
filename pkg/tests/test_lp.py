"""Tests for the truncated LP, its solution and the dual feasibility check."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from steincert.errors import DomainError, StateError
from steincert.models import JacobiParams, LPSolution, LPStatus, SpaceKind, Verdict
from steincert.services import LPService, SpaceCatalog


def vertex_optimum(lp):
    """Best objective over the basic feasible solutions, or None when there is none"""
    matrix = np.vstack([np.ones((1, lp.degree_cap + 1)), lp.cosines.T])
    rhs = np.zeros(matrix.shape[0])
    rhs[0] = 1.0
    rows = matrix.shape[0]
    best = None
    for basis in itertools.combinations(range(lp.degree_cap + 1), rows):
        sub = matrix[:, basis]
        if np.linalg.cond(sub) > 1e6:
            continue
        solution = np.linalg.solve(sub, rhs)
        if np.min(solution) < -1e-9:
            continue
        value = solution[0] if basis[0] == 0 else 0.0
        best = value if best is None else max(best, value)
    return best


class TestBuild:

    def test_cached_values(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [math.pi / 2], 4)
        assert lp.cosines.shape == (5, 1)
        assert_allclose(lp.cosines[:, 0], [1, 0, -0.5, 0, 0.375], rtol=0, atol=1e-12)

    def test_shape(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [2.0, 0.3], 50)
        assert lp.cosines.shape == (51, 2)
        assert lp.n_distances == 2

    @pytest.mark.parametrize('distances', [[0.5, 1.0], [4.0], [0.0], [1.0, 1.0]])
    def test_rejects_distances(self, distances):
        with pytest.raises(DomainError):
            LPService.build_truncation(JacobiParams(0, 0), distances, 5)

    def test_to_dict(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 3)
        assert lp.to_dict() == {'alpha': 0.0, 'beta': 0.0, 'distances': [1.0], 'K': 3}


class TestSolve:

    def test_no_distances(self):
        solution = LPService.solve_primal(LPService.build_truncation(JacobiParams(0, 0), [], 2))
        assert solution.status is LPStatus.OPTIMAL
        assert solution.primal_value == pytest.approx(1.0)
        assert solution.primal_f == pytest.approx({0: 1.0})

    def test_right_angle(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [math.pi / 2], 2)
        solution = LPService.solve_primal(lp)
        assert solution.status is LPStatus.OPTIMAL
        assert solution.primal_value == pytest.approx(1 / 3, abs=1e-12)
        assert solution.primal_f[0] == pytest.approx(1 / 3, abs=1e-12)
        assert solution.primal_f[2] == pytest.approx(2 / 3, abs=1e-12)
        assert solution.primal_f.get(1, 0.0) < 1e-12
        assert abs(LPService.weak_duality_gap(solution)) <= 1e-9

    def test_degree_one(self):
        solution = LPService.solve_primal(LPService.build_truncation(JacobiParams(0, 0), [math.pi / 2], 1))
        assert solution.status is LPStatus.OPTIMAL
        assert solution.primal_value == pytest.approx(0.0, abs=1e-12)

    def test_solution_to_dict(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [math.pi / 2], 2)
        data = LPService.solve_primal(lp).to_dict()
        assert set(data) == {'alpha', 'beta', 'distances', 'K', 'f', 'z', 'value', 'status'}
        assert data['status'] == 'Optimal'
        assert data['f'][0][0] == 0

    def test_monotone_in_truncation(self):
        params = JacobiParams(0, 0)
        values = []
        for K in range(2, 21):
            solution = LPService.solve_primal(LPService.build_truncation(params, [1.0, 0.4], K))
            values.append(solution.primal_value if solution.status is LPStatus.OPTIMAL else -np.inf)
        assert all(b >= a - 1e-9 for a, b in zip(values, values[1:]))

    def test_matches_vertex_enumeration(self):
        rng = np.random.default_rng(2024)
        spaces = ['s2', 'rp2', 'cp2', 'hp2', 'op2']
        instances = matched = 0
        while instances < 100:
            params = SpaceCatalog.params_of(SpaceKind.parse(rng.choice(spaces))).jacobi
            n = int(rng.integers(1, 3))
            K = int(rng.integers(n + 1, 13))
            distances = sorted(rng.uniform(0.05, 3.0, n), reverse=True)
            if n == 2 and distances[0] - distances[1] < 1e-3:
                continue
            instances += 1
            lp = LPService.build_truncation(params, distances, K)
            expected = vertex_optimum(lp)
            solution = LPService.solve_primal(lp)
            if expected is None:
                assert solution.status is LPStatus.INFEASIBLE
                continue
            assert solution.status is LPStatus.OPTIMAL
            assert solution.primal_value == pytest.approx(expected, abs=1e-8)
            assert abs(LPService.weak_duality_gap(solution)) <= 1e-7
            matched += 1
        assert matched >= 50

    @settings(max_examples=30, deadline=None)
    @given(
        distances=st.lists(st.floats(min_value=0.05, max_value=3.0), min_size=1, max_size=3,
                           unique=True),
        K=st.integers(min_value=2, max_value=30),
    )
    def test_weak_duality(self, distances, K):
        distances = sorted(distances, reverse=True)
        if any(a - b < 1e-6 for a, b in zip(distances, distances[1:])):
            return
        solution = LPService.solve_primal(LPService.build_truncation(JacobiParams(0, 0), distances, K))
        if solution.status is LPStatus.OPTIMAL:
            assert -1e-7 <= LPService.weak_duality_gap(solution) <= 1e-6

    def test_gap_needs_optimal_solution(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 1)
        infeasible = LPSolution(lp=lp, primal_value=float('nan'), primal_f={}, dual_z=(),
                                status=LPStatus.INFEASIBLE)
        with pytest.raises(StateError, match='optimal'):
            LPService.weak_duality_gap(infeasible)


class TestVerifyDual:

    def test_trivial_certificate(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 5)
        report = LPService.verify_dual(lp, [1.0, 0.0], 1000)
        assert report.verdict is Verdict.FEASIBLE
        assert report.min_slack == pytest.approx(1.0)
        assert report.normalization_slack == pytest.approx(0.0)

    def test_single_distance_certificate(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 1)
        report = LPService.verify_dual(lp, [0.5, 1.0], 10000)
        assert report.verdict is Verdict.FEASIBLE
        assert report.min_slack >= 0
        assert report.checked_up_to == 10000

    def test_negative_constant_term_violated(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 1)
        report = LPService.verify_dual(lp, [-1.0, 2.0], 5000)
        assert report.verdict is Verdict.VIOLATED
        assert report.min_slack < 0
        assert report.argmin_degree >= 1

    def test_normalization_violated(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 1)
        report = LPService.verify_dual(lp, [0.5, 0.25], 100)
        assert report.verdict is Verdict.VIOLATED
        assert report.normalization_slack == pytest.approx(-0.25)

    def test_lp_dual_is_feasible_up_to_truncation(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0, 0.2], 30)
        solution = LPService.solve_primal(lp)
        assert solution.status is LPStatus.OPTIMAL
        report = LPService.verify_dual(lp, solution.dual_z, 30, tol=1e-7)
        assert report.verdict is not Verdict.VIOLATED

    def test_certificate_dominates_primal(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 30)
        solution = LPService.solve_primal(lp)
        assert LPService.verify_dual(lp, [0.5, 1.0], 30).verdict is not Verdict.VIOLATED
        assert solution.primal_value <= 0.5 + 1e-7

    def test_wrong_length(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 3)
        with pytest.raises(DomainError, match='entries'):
            LPService.verify_dual(lp, [1.0], 10)

    def test_report_to_dict(self):
        lp = LPService.build_truncation(JacobiParams(0, 0), [1.0], 3)
        data = LPService.verify_dual(lp, [1.0, 0.0], 10).to_dict()
        assert data['verdict'] == 'Feasible'
        assert data['k_verify'] == 10
