"""
Truncated LP Models
"""
from enum import Enum
from dataclasses import dataclass, field

import numpy as np

from .jacobi import JacobiParams


class LPStatus(Enum):
    OPTIMAL = 'Optimal'
    INFEASIBLE = 'Infeasible'
    UNBOUNDED = 'Unbounded'
    ITERATION_LIMIT = 'IterationLimit'


class Verdict(Enum):
    FEASIBLE = 'Feasible'
    VIOLATED = 'Violated'
    FEASIBLE_UP_TO_CAP = 'FeasibleUpToCap'


@dataclass(frozen=True, eq=False)
class TruncatedLP:
    """
    Degree-K truncation of the density LP pair

    cosines[k, i] holds P_k(cos d_i) for 0 <= k <= K.
    """
    params: JacobiParams
    distances: tuple
    degree_cap: int
    cosines: np.ndarray = field(repr=False)

    @property
    def n_distances(self):
        return len(self.distances)

    def to_dict(self):
        return {
            'alpha': self.params.alpha,
            'beta': self.params.beta,
            'distances': list(self.distances),
            'K': self.degree_cap,
        }


@dataclass(frozen=True, eq=False)
class LPSolution:
    lp: TruncatedLP = field(repr=False)
    primal_value: float
    primal_f: dict
    dual_z: tuple
    status: LPStatus

    def to_dict(self):
        data = self.lp.to_dict()
        data.update({
            'f': [[k, w] for k, w in sorted(self.primal_f.items())],
            'z': list(self.dual_z),
            'value': self.primal_value,
            'status': self.status.value,
        })
        return data


@dataclass(frozen=True)
class FeasibilityReport:
    """Numeric check of the dual constraints up to a degree"""
    min_slack: float
    argmin_degree: int
    checked_up_to: int
    tail_margin: float
    verdict: Verdict
    normalization_slack: float = 0.0
    tolerance: float = 1e-9

    def to_dict(self):
        return {
            'k_verify': self.checked_up_to,
            'min_slack': self.min_slack,
            'argmin_degree': self.argmin_degree,
            'normalization_slack': self.normalization_slack,
            'tail_margin': self.tail_margin,
            'tolerance': self.tolerance,
            'verdict': self.verdict.value,
        }
