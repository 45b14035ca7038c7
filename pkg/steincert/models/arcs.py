"""
Dimension-One Arc Family Models
"""
from dataclasses import dataclass, field

import numpy as np

from .space import SpaceKind


@dataclass(frozen=True, eq=False)
class ArcFamily:
    """
    Level-k family of open arcs avoiding d_k, 3 d_k, ..., 3^k d_k

    center_angles[i] = 2 i theta_k; centers are the matching unit vectors.
    """
    space: SpaceKind
    level: int
    theta_k: float
    N_k: int
    center_angles: np.ndarray = field(repr=False)
    d_k: float
    length: float

    @property
    def arc_radius(self):
        return self.d_k / 2.0

    @property
    def centers(self):
        return np.column_stack((np.cos(self.center_angles), np.sin(self.center_angles)))


@dataclass(frozen=True)
class AvoidanceResult:
    min_gap: float
    analytic_ok: bool
    samples: int
    seed: int

    def to_dict(self):
        return {
            'min_gap': self.min_gap,
            'analytic_ok': self.analytic_ok,
            'samples': self.samples,
            'seed': self.seed,
        }


@dataclass(frozen=True)
class MeasureResult:
    arc_measure: float
    total: float
    lower_bound: float

    def to_dict(self):
        return {
            'arc_measure': self.arc_measure,
            'total_measure': self.total,
            'lower_bound': self.lower_bound,
        }
