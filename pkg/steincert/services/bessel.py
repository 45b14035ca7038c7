"""
Bessel Function Service
Bessel functions of the first kind, their first zeros and the limit profile Omega
"""
import math
import logging
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq
from scipy.special import gamma, jv

from ..errors import DomainError, NumericError, VerificationError
from ..models.bessel import BesselZero, OmegaProfile

logger = logging.getLogger(__name__)

MAX_ORDER = 11.0
MAX_ARGUMENT = 250.0
ZERO_TOLERANCE = 1e-10
CLAIM_B_BOUND = -0.45

# Envelope of |Omega| is tabulated on (0, ENVELOPE_SWITCH], amplitude bound beyond
ENVELOPE_SWITCH = 200.0
ENVELOPE_STEP = 0.01


class BesselService:
    """J_nu, j_nu and Omega_alpha(t) = Gamma(alpha+1) (2/t)^alpha J_alpha(t)"""

    @classmethod
    def _check_order(cls, nu):
        if not 0.0 <= nu <= MAX_ORDER:
            raise DomainError(f"Bessel order must lie in [0, {MAX_ORDER:g}], got {nu}")

    @classmethod
    def bessel_j(cls, nu, t):
        """
        J_nu(t)

        Args:
            nu: order in [0, 11]
            t: argument in [0, 250]

        Returns:
            float
        """
        cls._check_order(nu)
        if not 0.0 <= t <= MAX_ARGUMENT:
            raise DomainError(f"Bessel argument must lie in [0, {MAX_ARGUMENT:g}], got {t}")
        return float(jv(nu, t))

    @classmethod
    def first_positive_zero(cls, nu):
        """
        Smallest positive zero of J_nu

        Steps outward from max(nu, 1) by 0.5 until J_nu changes sign, then
        refines with brentq.

        Returns:
            BesselZero
        """
        cls._check_order(nu)
        return _first_zero(float(nu))

    @classmethod
    def omega(cls, alpha, t):
        """Omega_alpha(t) for t > 0"""
        if alpha < 0:
            raise DomainError(f"Omega needs alpha >= 0, got {alpha}")
        cls._check_order(alpha)
        if not 0.0 < t <= MAX_ARGUMENT:
            raise DomainError(f"Omega needs 0 < t <= {MAX_ARGUMENT:g}, got {t}")
        return float(_omega(alpha, t))

    @classmethod
    def omega_derivative(cls, alpha, t):
        """d/dt Omega_alpha(t) = -Gamma(alpha+1) (2/t)^alpha J_{alpha+1}(t)"""
        if alpha < 0:
            raise DomainError(f"Omega needs alpha >= 0, got {alpha}")
        cls._check_order(alpha + 1)
        if not 0.0 < t <= MAX_ARGUMENT:
            raise DomainError(f"Omega needs 0 < t <= {MAX_ARGUMENT:g}, got {t}")
        return float(-gamma(alpha + 1) * (2.0 / t) ** alpha * jv(alpha + 1, t))

    @classmethod
    def omega_inverse(cls, alpha, level):
        """
        Point x in (0, j_{alpha+1}) with Omega_alpha(x) = level

        Omega_alpha decreases from 1 to its minimum on that interval.
        """
        cls._check_order(alpha + 1)
        j = cls.first_positive_zero(alpha + 1).value
        low = _omega(alpha, j)
        if not low < level < 1.0:
            raise DomainError(f"Level must lie in ({low:.6g}, 1), got {level}")
        try:
            return float(brentq(lambda s: _omega(alpha, s) - level, 1e-8, j,
                                xtol=1e-20, rtol=4 * np.finfo(float).eps, maxiter=500))
        except ValueError as e:
            raise NumericError(f"Level {level!r} is too close to 1 to invert Omega_{alpha:g}",
                               {'alpha': alpha, 'level': level}) from e

    @classmethod
    def omega_envelope(cls, alpha, x):
        """
        sup over y >= x of |Omega_alpha(y)|

        Tabulated up to the switch point; beyond it the Bessel amplitude bound
        is used.
        """
        if x >= ENVELOPE_SWITCH:
            return _tail_amplitude(alpha, x)
        grid, suffix_max = _envelope_table(float(alpha))
        i = int(np.searchsorted(grid, x, side='left'))
        if i == 0:
            return 1.0
        return float(suffix_max[i - 1])

    @classmethod
    def omega_decay_point(cls, alpha, level):
        """
        Smallest x with sup over y >= x of |Omega_alpha(y)| < level

        Args:
            alpha: Omega order
            level: positive threshold

        Returns:
            float (0.0 when level > 1)
        """
        if level <= 0:
            raise DomainError(f"Decay level must be positive, got {level}")
        if level > 1.0:
            return 0.0
        if cls.omega_envelope(alpha, ENVELOPE_SWITCH) >= level:
            upper = ENVELOPE_SWITCH
            while cls.omega_envelope(alpha, upper) >= level:
                upper *= 2.0
            return float(brentq(lambda s: cls.omega_envelope(alpha, s) - level,
                                ENVELOPE_SWITCH, upper, xtol=1e-9))
        grid, suffix_max = _envelope_table(float(alpha))
        above = np.nonzero(suffix_max >= level)[0]
        if above.size == 0:
            return 0.0
        # one grid step past the last point where |Omega| reaches the level
        return float(grid[min(int(above[-1]) + 1, grid.size - 1)])

    @classmethod
    def claim_b_minimum(cls, alpha, bound=CLAIM_B_BOUND):
        """
        Global minimum of Omega_alpha and the check that it is >= bound

        The minimum is located as the root of J_{alpha+1} nearest the grid
        argmin and must coincide with j_{alpha+1}.

        Returns:
            OmegaProfile

        Raises:
            VerificationError: location or bound check failed
        """
        if not 0.0 <= alpha <= MAX_ORDER - 1:
            raise DomainError(f"Claim B check needs alpha in [0, {MAX_ORDER - 1:g}], got {alpha}")
        zero = cls.first_positive_zero(alpha + 1)

        upper = max(30.0, zero.value + 10.0)
        grid = np.linspace(upper / 6000.0, upper, 6000)
        values = _omega(alpha, grid)
        i = int(np.argmin(values))
        lo = grid[max(i - 1, 0)]
        hi = grid[min(i + 1, grid.size - 1)]
        if cls.omega_derivative(alpha, lo) * cls.omega_derivative(alpha, hi) > 0:
            raise NumericError(
                f"Omega_{alpha:g} minimum not bracketed by a zero of J_{alpha + 1:g}",
                {'alpha': alpha, 'bracket': [float(lo), float(hi)]},
            )
        location = float(brentq(lambda s: cls.omega_derivative(alpha, s), lo, hi, xtol=1e-14))
        profile = OmegaProfile(alpha=float(alpha), min_location=location,
                               min_value=float(_omega(alpha, location)))

        if abs(location - zero.value) > 1e-8:
            raise VerificationError(
                f"Omega_{alpha:g} minimum at {location:.12g}, expected j = {zero.value:.12g}",
                profile,
            )
        if profile.min_value < bound:
            raise VerificationError(
                f"Omega_{alpha:g} minimum {profile.min_value:.9g} is below {bound}",
                profile,
            )
        logger.debug(f"Omega_{alpha:g} minimum {profile.min_value:.9f} at {location:.9f}")
        return profile

    @classmethod
    def claim_b_sweep(cls, alphas=None, strict=True):
        """
        Claim B over a grid of alphas with zero and Landau monotonicity

        Args:
            alphas: orders to check (default 0, 0.25, ..., 8)
            strict: raise VerificationError when any check fails

        Returns:
            dict report
        """
        if alphas is None:
            alphas = np.arange(0.0, 8.0 + 1e-9, 0.25)
        rows = []
        failures = []
        for alpha in alphas:
            zero = cls.first_positive_zero(alpha + 1)
            landau = float(jv(alpha, zero.value))
            try:
                profile = cls.claim_b_minimum(alpha)
                min_value = profile.min_value
            except VerificationError as e:
                failures.append(str(e))
                min_value = e.report.min_value if e.report is not None else float('nan')
            rows.append({
                'alpha': float(alpha),
                'j_alpha_plus_1': zero.value,
                'omega_min': min_value,
                'landau_value': landau,
            })

        zeros = [row['j_alpha_plus_1'] for row in rows]
        landau = [row['landau_value'] for row in rows]
        report = {
            'rows': rows,
            'claim_b_ok': not failures,
            'zeros_increasing': all(b > a for a, b in zip(zeros, zeros[1:])),
            'landau_monotone': all(b >= a for a, b in zip(landau, landau[1:])),
            'failures': failures,
        }
        report['ok'] = report['claim_b_ok'] and report['zeros_increasing'] and report['landau_monotone']
        logger.info(f"Claim B sweep over {len(rows)} orders: ok={report['ok']}")
        if strict and not report['ok']:
            raise VerificationError("Claim B sweep failed", report)
        return report


def _omega(alpha, t):
    return gamma(alpha + 1) * (2.0 / t) ** alpha * jv(alpha, t)


def _tail_amplitude(alpha, x):
    """Amplitude bound of |Omega_alpha| for large arguments"""
    amplitude = gamma(alpha + 1) * 2.0 ** alpha * math.sqrt(2.0 / math.pi)
    return float(amplitude * x ** (-alpha - 0.5) * (1.0 + abs(4 * alpha * alpha - 1) / (8.0 * x)))


@lru_cache(maxsize=32)
def _envelope_table(alpha):
    grid = np.arange(ENVELOPE_STEP, ENVELOPE_SWITCH + ENVELOPE_STEP / 2, ENVELOPE_STEP)
    magnitudes = np.abs(_omega(alpha, grid))
    magnitudes[-1] = max(magnitudes[-1], _tail_amplitude(alpha, ENVELOPE_SWITCH))
    suffix_max = np.maximum.accumulate(magnitudes[::-1])[::-1]
    return grid, suffix_max


@lru_cache(maxsize=128)
def _first_zero(nu):
    start = max(nu, 1.0)
    left = start
    right = start + 0.5
    steps = 0
    while jv(nu, left) * jv(nu, right) > 0:
        left, right = right, right + 0.5
        steps += 1
        if steps > 200:
            raise NumericError(f"No sign change of J_{nu:g} found", {'order': nu, 'last': right})
    try:
        value = float(brentq(lambda s: jv(nu, s), left, right, xtol=1e-14))
    except (RuntimeError, ValueError) as e:
        raise NumericError(f"Zero refinement of J_{nu:g} failed: {e}", {'order': nu}) from e

    residual = float(jv(nu, value))
    if abs(residual) > ZERO_TOLERANCE:
        raise NumericError(f"Residual {residual:.3g} at j_{nu:g} exceeds tolerance",
                           {'order': nu, 'value': value})
    grid = np.linspace(value * 1e-3, value * (1.0 - 1e-4), 2000)
    if np.any(jv(nu, grid) <= 0):
        raise NumericError(f"J_{nu:g} changes sign before {value:.12g}", {'order': nu})
    return BesselZero(order=nu, value=value, residual=residual)
