"""
Jacobi Polynomial Models
"""
from dataclasses import dataclass, asdict

from ..errors import DomainError


@dataclass(frozen=True)
class JacobiParams:
    """Parameter pair (alpha, beta) of a Jacobi family normalized by P_k(1) = 1"""
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise DomainError(f"Jacobi parameters must exceed -1, got ({self.alpha}, {self.beta})")
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'beta', float(self.beta))

    def shifted(self, da=1, db=1):
        """Parameters (alpha + da, beta + db)"""
        return JacobiParams(self.alpha + da, self.beta + db)

    @property
    def rho(self):
        """Half the parameter sum plus one half, the phase shift of the Hilb approximation"""
        return (self.alpha + self.beta + 1.0) / 2.0

    def to_dict(self):
        return asdict(self)

    def __str__(self):
        return f"({self.alpha:g}, {self.beta:g})"


@dataclass(frozen=True)
class PolyValue:
    value: float
    degree: int
    argument: float

    def __post_init__(self):
        if self.degree < 0 or abs(self.argument) > 1:
            raise DomainError(f"Invalid polynomial value record: degree={self.degree}, t={self.argument}")

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class InfimumResult:
    """Minimum of P_k(t) over 0 <= k <= degree_cap"""
    value: float
    attained_degree: int
    degree_cap: int
    argument: float = float('nan')

    def to_dict(self):
        return asdict(self)
