"""
Truncated LP Service
Degree truncations of the density LP, their solution and dual feasibility checks
"""
import logging

import numpy as np
from scipy.optimize import linprog

from ..errors import DomainError, StateError
from ..models.lp import LPStatus, Verdict, TruncatedLP, LPSolution, FeasibilityReport
from .jacobi import JacobiService

logger = logging.getLogger(__name__)

SOLVER_OPTIONS = {
    'primal_feasibility_tolerance': 1e-10,
    'dual_feasibility_tolerance': 1e-10,
}

STATUS_MAP = {
    0: LPStatus.OPTIMAL,
    1: LPStatus.ITERATION_LIMIT,
    2: LPStatus.INFEASIBLE,
    3: LPStatus.UNBOUNDED,
}

WEIGHT_FLOOR = 1e-14
TAIL_FRACTION = 10


class LPService:
    """Build, solve and certify truncated density LPs"""

    @classmethod
    def validate_distances(cls, distances):
        values = [float(d) for d in distances]
        for d in values:
            if not 0.0 < d < np.pi:
                raise DomainError(f"Distance {d!r} is outside (0, pi)")
        for a, b in zip(values, values[1:]):
            if not b < a:
                raise DomainError(f"Distances must be strictly decreasing ({a!r} then {b!r})")
        return tuple(values)

    @classmethod
    def build_truncation(cls, params, distances, K):
        """
        Cache P_k(cos d_i) for 0 <= k <= K

        Args:
            params: JacobiParams
            distances: strictly decreasing values in (0, pi)
            K: truncation degree

        Returns:
            TruncatedLP
        """
        distances = cls.validate_distances(distances)
        K = JacobiService.check_degree(K, minimum=1)
        cosines = JacobiService.table(params, K, np.cos(np.asarray(distances, dtype=float)))
        return TruncatedLP(params=params, distances=distances, degree_cap=K, cosines=cosines)

    @classmethod
    def solve_primal(cls, lp):
        """
        Maximize f_0 subject to sum f_k = 1, sum f_k P_k(cos d_i) = 0, f >= 0

        The dual vector z is read from the equality marginals of the HiGHS
        dual simplex; z_0 is the dual objective.

        Returns:
            LPSolution
        """
        n_vars = lp.degree_cap + 1
        objective = np.zeros(n_vars)
        objective[0] = -1.0
        a_eq = np.vstack([np.ones((1, n_vars)), lp.cosines.T])
        b_eq = np.zeros(a_eq.shape[0])
        b_eq[0] = 1.0

        res = linprog(objective, A_eq=a_eq, b_eq=b_eq, bounds=(0, None),
                      method='highs-ds', options=SOLVER_OPTIONS)
        status = STATUS_MAP.get(res.status)
        if status is None:
            logger.warning(f"Solver reported status {res.status}: {res.message}")
            status = LPStatus.ITERATION_LIMIT

        if status is not LPStatus.OPTIMAL:
            logger.info(f"Truncated LP K={lp.degree_cap}, N={lp.n_distances}: {status.value}")
            return LPSolution(lp=lp, primal_value=float('nan'), primal_f={},
                              dual_z=(), status=status)

        weights = np.clip(res.x, 0.0, None)
        primal_f = {int(k): float(w) for k, w in enumerate(weights) if w > WEIGHT_FLOOR}
        dual_z = tuple(float(-m) for m in res.eqlin.marginals)
        solution = LPSolution(lp=lp, primal_value=float(-res.fun), primal_f=primal_f,
                              dual_z=dual_z, status=status)
        logger.info(f"Truncated LP K={lp.degree_cap}, N={lp.n_distances}: "
                    f"value={solution.primal_value:.12g}")
        return solution

    @classmethod
    def weak_duality_gap(cls, sol):
        """Dual objective minus primal value of an optimal solution"""
        if sol.status is not LPStatus.OPTIMAL:
            raise StateError(f"Duality gap needs an optimal solution, got {sol.status.value}")
        return sol.dual_z[0] - sol.primal_value

    @classmethod
    def verify_dual(cls, lp, z, k_verify, tol=1e-9):
        """
        Check z_0 + sum z_i P_k(cos d_i) >= 0 for 1 <= k <= k_verify and z_0 + ... + z_N >= 1

        The tolerance is scaled by sum |z_i|, the largest possible row value.
        The tail margin z_0 - sum |z_i| * max |P_k(cos d_i)| over the last tenth
        of the degrees supports, without proving, the constraints beyond k_verify.

        Returns:
            FeasibilityReport
        """
        z = np.asarray(z, dtype=float)
        if z.shape != (lp.n_distances + 1,):
            raise DomainError(f"Dual vector needs {lp.n_distances + 1} entries, got {z.size}")
        k_verify = JacobiService.check_degree(k_verify, minimum=1)

        cosines = np.cos(np.asarray(lp.distances, dtype=float))
        if k_verify <= lp.degree_cap:
            values = lp.cosines[:k_verify + 1]
        else:
            values = JacobiService.table(lp.params, k_verify, cosines)

        slacks = z[0] + values[1:] @ z[1:]
        i = int(np.argmin(slacks))
        min_slack = float(slacks[i])
        normalization_slack = float(z.sum() - 1.0)

        tail_start = max(1, k_verify - k_verify // TAIL_FRACTION)
        tail_max = float(np.max(np.abs(values[tail_start:]))) if lp.n_distances else 0.0
        tail_margin = float(z[0] - np.abs(z[1:]).sum() * tail_max)

        tolerance = tol * max(1.0, float(np.abs(z).sum()))
        if min_slack < -tolerance or normalization_slack < -tolerance:
            verdict = Verdict.VIOLATED
        elif tail_margin > 0:
            verdict = Verdict.FEASIBLE
        else:
            verdict = Verdict.FEASIBLE_UP_TO_CAP

        report = FeasibilityReport(
            min_slack=min_slack,
            argmin_degree=i + 1,
            checked_up_to=k_verify,
            tail_margin=tail_margin,
            verdict=verdict,
            normalization_slack=normalization_slack,
            tolerance=tolerance,
        )
        logger.info(f"Dual check up to k={k_verify}: min slack {min_slack:.3e} at k={i + 1}, "
                    f"{verdict.value}")
        return report
