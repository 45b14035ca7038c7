"""
Domain Models
"""
from .jacobi import JacobiParams, PolyValue, InfimumResult
from .bessel import BesselZero, OmegaProfile
from .space import Family, SpaceKind, SpaceParams
from .lp import LPStatus, Verdict, TruncatedLP, LPSolution, FeasibilityReport
from .certificate import (
    LemmaConstants,
    SpacingResult,
    DistancePlan,
    DecayReport,
    BoundCertificate,
)
from .arcs import ArcFamily, AvoidanceResult, MeasureResult
from .run import Command, OutputFormat, RunConfig

__all__ = [
    'JacobiParams', 'PolyValue', 'InfimumResult',
    'BesselZero', 'OmegaProfile',
    'Family', 'SpaceKind', 'SpaceParams',
    'LPStatus', 'Verdict', 'TruncatedLP', 'LPSolution', 'FeasibilityReport',
    'LemmaConstants', 'SpacingResult', 'DistancePlan', 'DecayReport', 'BoundCertificate',
    'ArcFamily', 'AvoidanceResult', 'MeasureResult',
    'Command', 'OutputFormat', 'RunConfig',
]
