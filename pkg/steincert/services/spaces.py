"""
Space Catalog Service
Real dimensions and Jacobi parameters of the rank-one symmetric spaces,
and the explicit metrics of the circle and the real projective line
"""
import numpy as np

from ..errors import DomainError
from ..models.jacobi import JacobiParams
from ..models.space import Family, SpaceKind, SpaceParams

UNIT_TOLERANCE = 1e-12


class SpaceCatalog:
    """Parameter table and one-dimensional metrics"""

    @classmethod
    def params_of(cls, space):
        """
        Real dimension and (alpha, beta) of a space

        Args:
            space: SpaceKind

        Returns:
            SpaceParams
        """
        n = space.n
        family = space.family
        if family is Family.SPHERE:
            return SpaceParams(n - 1, JacobiParams((n - 3) / 2, (n - 3) / 2))
        if family is Family.REAL_PROJECTIVE:
            return SpaceParams(n - 1, JacobiParams((n - 3) / 2, -0.5))
        if family is Family.COMPLEX_PROJECTIVE:
            return SpaceParams(2 * (n - 1), JacobiParams(n - 2, 0))
        if family is Family.QUATERNIONIC_PROJECTIVE:
            return SpaceParams(4 * (n - 1), JacobiParams(2 * n - 3, 1))
        return SpaceParams(16, JacobiParams(7, 3))

    @classmethod
    def resolve(cls, space):
        """Accept a SpaceKind or a CLI name"""
        if isinstance(space, SpaceKind):
            return space
        return SpaceKind.parse(space)

    @classmethod
    def min_alpha_for_theorem(cls, space):
        """True iff the space has real dimension >= 2, equivalently alpha >= 0"""
        return cls.params_of(space).real_dimension >= 2

    @classmethod
    def is_one_dimensional(cls, space):
        return space.n == 2 and space.family in (Family.SPHERE, Family.REAL_PROJECTIVE)

    @classmethod
    def circumference(cls, space):
        """
        Total length of S^1 or RP^1 under its metric

        Both are 2 pi: RP^1 distances are twice the angle between lines,
        and the lines sweep an angle of pi.
        """
        if not cls.is_one_dimensional(space):
            raise DomainError(f"{space.label} is not one-dimensional")
        return 2.0 * np.pi

    @classmethod
    def _unit_pair(cls, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape[-1:] != (2,) or y.shape[-1:] != (2,):
            raise DomainError("Points must be plane vectors")
        for name, v in (('x', x), ('y', y)):
            if np.any(np.abs(np.linalg.norm(v, axis=-1) - 1.0) > UNIT_TOLERANCE):
                raise DomainError(f"{name} is not a unit vector")
        cross = np.abs(x[..., 0] * y[..., 1] - x[..., 1] * y[..., 0])
        dot = x[..., 0] * y[..., 0] + x[..., 1] * y[..., 1]
        return cross, dot

    @classmethod
    def distance_s1(cls, x, y):
        """
        Geodesic distance arccos(x . y) on the circle

        Computed as atan2(|x cross y|, x . y), which agrees with arccos for
        unit vectors and keeps full precision near 0 and pi. Accepts stacked
        points of shape (..., 2).
        """
        cross, dot = cls._unit_pair(x, y)
        return _as_float(np.arctan2(cross, dot))

    @classmethod
    def distance_rp1(cls, x, y):
        """
        Distance arccos(2 (x . y)^2 - 1) on the real projective line

        Twice the angle between the lines spanned by x and y.
        """
        cross, dot = cls._unit_pair(x, y)
        return _as_float(2.0 * np.arctan2(cross, np.abs(dot)))

    @classmethod
    def distance(cls, space, x, y):
        if not cls.is_one_dimensional(space):
            raise DomainError(f"No point model for {space.label}")
        if space.family is Family.SPHERE:
            return cls.distance_s1(x, y)
        return cls.distance_rp1(x, y)


def _as_float(value):
    return float(value) if np.ndim(value) == 0 else value
