"""
Bessel Function Models
"""
from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class BesselZero:
    """First positive zero j_order of J_order"""
    order: float
    value: float
    residual: float

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class OmegaProfile:
    """Location and value of the global minimum of Omega_alpha"""
    alpha: float
    min_location: float
    min_value: float

    def to_dict(self):
        return asdict(self)
