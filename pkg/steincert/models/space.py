"""
Symmetric Space Models
"""
import re
from enum import Enum
from dataclasses import dataclass

from ..errors import DomainError
from .jacobi import JacobiParams


class Family(Enum):
    """The five families of compact, connected, rank-one symmetric spaces"""
    SPHERE = 's'
    REAL_PROJECTIVE = 'rp'
    COMPLEX_PROJECTIVE = 'cp'
    QUATERNIONIC_PROJECTIVE = 'hp'
    OCTONIONIC_PLANE = 'op'


_NAME_PATTERN = re.compile(r'^(s|rp|cp|hp|op)(\d+)$')


@dataclass(frozen=True)
class SpaceKind:
    """
    A space family with its parameter n

    n is the parameter of S^{n-1}, RP^{n-1}, CP^{n-1} and HP^{n-1};
    the octonionic plane is fixed at n = 3.
    """
    family: Family
    n: int = 3

    def __post_init__(self):
        if self.family is Family.OCTONIONIC_PLANE:
            object.__setattr__(self, 'n', 3)
        elif int(self.n) != self.n or self.n < 2:
            raise DomainError(f"{self.family.name} requires an integer n >= 2, got {self.n}")
        object.__setattr__(self, 'n', int(self.n))

    @classmethod
    def parse(cls, name):
        """
        Parse a CLI space name such as 's2', 'RP1', 'cp3' or 'op2'

        Args:
            name: family prefix followed by the manifold index n - 1

        Returns:
            SpaceKind
        """
        match = _NAME_PATTERN.match(str(name).strip().lower())
        if not match:
            raise DomainError(f"Unknown space '{name}' (expected s<m>, rp<m>, cp<m>, hp<m> or op2)")
        family = Family(match.group(1))
        index = int(match.group(2))
        if family is Family.OCTONIONIC_PLANE:
            if index != 2:
                raise DomainError(f"Only the octonionic plane op2 exists, got '{name}'")
            return cls(family)
        return cls(family, index + 1)

    @property
    def label(self):
        if self.family is Family.OCTONIONIC_PLANE:
            return 'op2'
        return f"{self.family.value}{self.n - 1}"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class SpaceParams:
    """Real dimension and Jacobi parameters of a space"""
    real_dimension: int
    jacobi: JacobiParams

    def to_dict(self):
        return {
            'real_dimension': self.real_dimension,
            'alpha': self.jacobi.alpha,
            'beta': self.jacobi.beta,
        }
