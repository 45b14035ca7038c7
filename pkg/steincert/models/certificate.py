"""
Bound Pipeline Models
"""
from dataclasses import dataclass, field

from .jacobi import JacobiParams
from .space import SpaceKind
from .lp import FeasibilityReport, Verdict


@dataclass(frozen=True)
class LemmaConstants:
    """t0, d0 and lambda of the lemma together with the scan that produced them"""
    params: JacobiParams
    t0: float
    d0: float
    lam: float
    k_star: int
    degree_cap: int
    grid_size: int
    lam_degree: int = 0
    lam_argument: float = float('nan')

    def to_dict(self):
        return {
            'alpha': self.params.alpha,
            'beta': self.params.beta,
            't0': self.t0,
            'd0': self.d0,
            'lambda': self.lam,
            'k_star': self.k_star,
            'degree_cap': self.degree_cap,
            'grid_size': self.grid_size,
            'lambda_degree': self.lam_degree,
            'lambda_argument': self.lam_argument,
        }


@dataclass(frozen=True)
class SpacingResult:
    """One evaluation of the spacing function r(d)"""
    d: float
    eps: float
    r: float
    k0: int
    u0: float
    extrapolated: bool = False
    degree_cap: int = 0

    def to_dict(self):
        return {
            'd': self.d,
            'eps': self.eps,
            'k0': self.k0,
            'u0': self.u0,
            'r': self.r,
            'extrapolated': self.extrapolated,
        }


@dataclass(frozen=True)
class DistancePlan:
    space: SpaceKind
    N: int
    distances: tuple
    epsilon: float = None
    r_trace: tuple = ()
    start_fraction: float = None
    shrink: float = 1.0
    spacing_ok: bool = True

    def to_dict(self):
        return {
            'space': self.space.label,
            'N': self.N,
            'distances': list(self.distances),
            'epsilon': self.epsilon,
            'start_fraction': self.start_fraction,
            'shrink': self.shrink,
            'spacing_ok': self.spacing_ok,
            'r_trace': [step.to_dict() for step in self.r_trace],
        }


@dataclass(frozen=True)
class DecayReport:
    """Minimum slack of the partial-sum inequality over j <= N and k <= k_max"""
    min_slack: float
    j: int
    k: int
    k_max: int
    tolerance: float = 1e-9

    @property
    def ok(self):
        return self.min_slack >= -self.tolerance

    def to_dict(self):
        return {
            'k_max': self.k_max,
            'min_slack': self.min_slack,
            'j': self.j,
            'k': self.k,
            'ok': self.ok,
        }


@dataclass(frozen=True)
class BoundCertificate:
    plan: DistancePlan
    constants: LemmaConstants
    z: tuple
    S: float
    bound: float
    feasibility: FeasibilityReport
    decay_claim: DecayReport = None
    caps: dict = field(default_factory=dict)

    @property
    def two_to_minus_n(self):
        return 2.0 ** (-self.plan.N)

    @property
    def accepted(self):
        return (self.feasibility.verdict is not Verdict.VIOLATED
                and self.bound <= self.two_to_minus_n)

    def to_dict(self):
        params = self.constants.params
        data = {
            'space': self.plan.space.label,
            'alpha': params.alpha,
            'beta': params.beta,
            'N': self.plan.N,
            't0': self.constants.t0,
            'd0': self.constants.d0,
            'lambda': self.constants.lam,
            'k_star': self.constants.k_star,
            'epsilon': self.plan.epsilon,
            'distances': list(self.plan.distances),
            'z': list(self.z),
            'S': self.S,
            'bound': self.bound,
            'two_to_minus_N': self.two_to_minus_n,
            'feasibility': self.feasibility.to_dict(),
            'spacing_ok': self.plan.spacing_ok,
            'caps': dict(self.caps),
            'r_trace': [step.to_dict() for step in self.plan.r_trace],
        }
        if self.decay_claim is not None:
            data['decay_claim'] = self.decay_claim.to_dict()
        return data
