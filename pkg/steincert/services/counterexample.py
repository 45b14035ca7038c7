"""
Counterexample Service
Arc families on the circle and the real projective line that avoid the
distances d_k, 3 d_k, ..., 3^k d_k while keeping measure at least 1/8
"""
import logging

import numpy as np

from ..errors import DomainError, StateError
from ..models.arcs import ArcFamily, AvoidanceResult, MeasureResult
from ..models.space import Family
from .spaces import SpaceCatalog

logger = logging.getLogger(__name__)

MAX_LEVEL = 12
SAMPLE_CHUNK = 10000
ALL_PAIRS_LIMIT = 400
LINEARITY_TOLERANCE = 1e-10


class CounterexampleService:
    """Level-k arc construction with avoidance and measure checks"""

    @classmethod
    def build(cls, space, k):
        """
        Arc family of level k

        Centers sit at angles 2 i theta_k with theta_k = (pi/2) / 3^k for
        0 <= i < N_k = ceil(3^k / 2); d_k is half the distance between
        consecutive centers.

        Args:
            space: SpaceKind, S^1 or RP^1
            k: level in [1, 12]

        Returns:
            ArcFamily
        """
        if not SpaceCatalog.is_one_dimensional(space):
            raise DomainError(f"Arc families exist only on s1 and rp1, got {space.label}")
        if isinstance(k, bool) or int(k) != k or not 1 <= k <= MAX_LEVEL:
            raise DomainError(f"Level must be an integer in [1, {MAX_LEVEL}], got {k}")
        k = int(k)

        theta_k = (np.pi / 2) / 3 ** k
        n_k = (3 ** k + 1) // 2
        angles = 2.0 * theta_k * np.arange(n_k)
        first, second = _unit(angles[:2])
        d_k = SpaceCatalog.distance(space, first, second) / 2.0

        family = ArcFamily(space=space, level=k, theta_k=theta_k, N_k=n_k,
                           center_angles=angles, d_k=float(d_k),
                           length=SpaceCatalog.circumference(space))
        logger.info(f"Arc family {space.label} level {k}: N_k={n_k}, d_k={d_k:.12g}")
        return family

    @classmethod
    def forbidden_distances(cls, family, up_to=None):
        """[3^0 d_k, ..., 3^up_to d_k], which equals [d_k, ..., d_{k-up_to}]"""
        up_to = family.level if up_to is None else up_to
        if not 0 <= up_to <= family.level:
            raise DomainError(f"up_to must lie in [0, {family.level}], got {up_to}")
        return [3 ** i * family.d_k for i in range(up_to + 1)]

    @classmethod
    def center_distances_linear(cls, family):
        """d(e_i, e_j) = 2 |i - j| d_k on all pairs, or on rows 0 and consecutive pairs for large N_k"""
        centers = family.centers
        n = family.N_k
        if n <= ALL_PAIRS_LIMIT:
            i, j = np.triu_indices(n, k=1)
        else:
            i = np.concatenate([np.zeros(n - 1, dtype=int), np.arange(n - 1)])
            j = np.concatenate([np.arange(1, n), np.arange(1, n)])
        measured = SpaceCatalog.distance(family.space, centers[i], centers[j])
        expected = 2.0 * np.abs(i - j) * family.d_k
        return float(np.max(np.abs(measured - expected)))

    @classmethod
    def check_avoidance(cls, family, samples, rng_seed=0):
        """
        Analytic and sampled check that no forbidden distance occurs in the union of arcs

        Analytic: with center distances 2 m d_k and arc radius d_k / 2, the
        distances between arcs m apart fill ((2m - 1) d_k, (2m + 1) d_k),
        which holds no odd multiple of d_k. Sampled: random pairs of points
        from the open arcs, split into chunks with spawned seeds.

        Returns:
            AvoidanceResult with the smallest gap to a forbidden value
        """
        if samples < 1:
            raise DomainError(f"samples must be positive, got {samples}")
        linear_error = cls.center_distances_linear(family)
        multiples = [3 ** i for i in range(family.level + 1)]
        # odd multiples never fall strictly between 2m - 1 and 2m + 1
        bands_ok = all(f % 2 == 1 for f in multiples)
        analytic_ok = bands_ok and linear_error <= LINEARITY_TOLERANCE

        forbidden = np.asarray(cls.forbidden_distances(family), dtype=float)
        half_width = family.theta_k / 2.0
        chunks = -(-samples // SAMPLE_CHUNK)
        seeds = np.random.SeedSequence(rng_seed).spawn(chunks)
        min_gap = np.inf
        remaining = samples
        for seed in seeds:
            size = min(SAMPLE_CHUNK, remaining)
            remaining -= size
            rng = np.random.default_rng(seed)
            i = rng.integers(0, family.N_k, size)
            j = rng.integers(0, family.N_k, size)
            a = family.center_angles[i] + rng.uniform(-half_width, half_width, size)
            b = family.center_angles[j] + rng.uniform(-half_width, half_width, size)
            dist = SpaceCatalog.distance(family.space, _unit(a), _unit(b))
            gaps = np.min(np.abs(np.atleast_1d(dist)[:, None] - forbidden[None, :]), axis=1)
            min_gap = min(min_gap, float(np.min(gaps)))

        logger.info(f"Avoidance {family.space.label} level {family.level}: "
                    f"analytic_ok={analytic_ok}, min_gap={min_gap:.3e} over {samples} samples")
        return AvoidanceResult(min_gap=min_gap, analytic_ok=analytic_ok,
                               samples=samples, seed=rng_seed)

    @classmethod
    def measure(cls, family):
        """
        Normalized measure of one arc, of their union and the level-one lower bound

        Raises:
            StateError: arcs overlap
        """
        gap = cls.neighbour_gap(family)
        if abs(gap - family.d_k) > LINEARITY_TOLERANCE:
            raise StateError(f"Arcs of level {family.level} are {gap!r} apart, expected d_k")
        # angles live on a circle of period 2 pi (S^1) or pi (lines of RP^1)
        period = 2.0 * np.pi if family.space.family is Family.SPHERE else np.pi
        wrap = period - (family.center_angles[-1] - family.center_angles[0]) - family.theta_k
        if wrap <= 0:
            raise StateError(f"Arcs of level {family.level} overlap across the wrap")

        arc_measure = 2.0 * family.arc_radius / family.length
        level_one = 3 ** (family.level - 1) * family.d_k
        return MeasureResult(
            arc_measure=float(arc_measure),
            total=float(family.N_k * arc_measure),
            lower_bound=float(1.5 * level_one / family.length),
        )

    @classmethod
    def neighbour_gap(cls, family):
        """Distance between the closest endpoints of arcs 0 and 1"""
        half_width = family.theta_k / 2.0
        end, start = _unit([family.center_angles[0] + half_width,
                            family.center_angles[1] - half_width])
        return SpaceCatalog.distance(family.space, end, start)

    @classmethod
    def to_csv_rows(cls, family):
        rows = [('index', 'center_angle', 'radius')]
        rows.extend((i, float(angle), family.arc_radius)
                    for i, angle in enumerate(family.center_angles))
        return rows

    @classmethod
    def summary(cls, family, avoidance=None, measure=None):
        measure = measure or cls.measure(family)
        data = {
            'space': family.space.label,
            'k': family.level,
            'theta_k': family.theta_k,
            'd_k': family.d_k,
            'N_k': family.N_k,
            'arc_radius': family.arc_radius,
            'forbidden': cls.forbidden_distances(family),
        }
        data.update(measure.to_dict())
        if avoidance is not None:
            data.update(avoidance.to_dict())
        return data


def _unit(angles):
    angles = np.asarray(angles, dtype=float)
    return np.stack((np.cos(angles), np.sin(angles)), axis=-1)
