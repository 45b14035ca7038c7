"""
Jacobi Polynomial Service
Evaluation, zeros and sup-norm scans of Jacobi polynomials normalized by P_k(1) = 1
"""
import math
import logging

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from ..errors import DomainError, NumericError
from ..models.jacobi import PolyValue, InfimumResult

logger = logging.getLogger(__name__)

ZERO_XTOL = 1e-15
REFINE_XATOL = 1e-12


def _coefficients(alpha, beta, n):
    """
    Recurrence P_n = (a x + b) P_{n-1} - c P_{n-2} (n >= 2) in the P_n(1) = 1 normalization

    The classical coefficients are rescaled by the ratios of the values at 1,
    binom(n-1+alpha, n-1) / binom(n+alpha, n) = n / (n+alpha).
    """
    s = alpha + beta
    m = 2 * n + s
    denom = 2.0 * n * (n + s) * (m - 2)
    a = (m - 1) * m * (m - 2) / denom
    b = (m - 1) * (alpha * alpha - beta * beta) / denom
    c = 2.0 * (n + alpha - 1) * (n + beta - 1) * m / denom
    r1 = n / (n + alpha)
    r2 = r1 * (n - 1) / (n - 1 + alpha)
    return a * r1, b * r1, c * r2


def _iterate(params, x, kmax):
    """Yield (k, P_k(x)) for k = 0..kmax; x is a float or an ndarray"""
    alpha, beta = params.alpha, params.beta
    if isinstance(x, np.ndarray):
        prev = np.ones_like(x, dtype=float)
    else:
        prev = 1.0
    yield 0, prev
    if kmax == 0:
        return
    cur = ((alpha + beta + 2) * x + (alpha - beta)) / (2 * (alpha + 1))
    yield 1, cur
    for n in range(2, kmax + 1):
        a, b, c = _coefficients(alpha, beta, n)
        prev, cur = cur, (a * x + b) * cur - c * prev
        yield n, cur


def _last(params, x, k):
    value = None
    for _, value in _iterate(params, x, k):
        pass
    return value


class JacobiService:
    """Normalized Jacobi polynomial evaluation and analysis"""

    @classmethod
    def check_degree(cls, k, minimum=0):
        if isinstance(k, bool) or int(k) != k or k < minimum:
            raise DomainError(f"Degree must be an integer >= {minimum}, got {k}")
        return int(k)

    @classmethod
    def check_argument(cls, t):
        t = np.asarray(t, dtype=float)
        if not np.all(np.isfinite(t)) or np.any(np.abs(t) > 1.0):
            raise DomainError("Jacobi arguments must lie in [-1, 1]")
        return t

    @classmethod
    def eval(cls, params, k, t):
        """
        Value of the normalized Jacobi polynomial

        Args:
            params: JacobiParams
            k: degree
            t: argument in [-1, 1]

        Returns:
            float: P_k(t)
        """
        k = cls.check_degree(k)
        t = float(cls.check_argument(t))
        return float(_last(params, t, k))

    @classmethod
    def value(cls, params, k, t):
        return PolyValue(value=cls.eval(params, k, t), degree=int(k), argument=float(t))

    @classmethod
    def eval_array(cls, params, k, t):
        """P_k on an array of arguments"""
        k = cls.check_degree(k)
        t = np.atleast_1d(cls.check_argument(t))
        return _last(params, t, k)

    @classmethod
    def table(cls, params, kmax, t):
        """
        All values P_0..P_kmax at the given arguments

        Returns:
            ndarray of shape (kmax + 1, len(t))
        """
        kmax = cls.check_degree(kmax)
        t = np.atleast_1d(cls.check_argument(t))
        out = np.empty((kmax + 1, t.size))
        for k, values in _iterate(params, t, kmax):
            out[k] = values
        return out

    @classmethod
    def iterate(cls, params, t, kmax):
        """Rolling (k, values) sweep for scans that never hold the full table"""
        kmax = cls.check_degree(kmax)
        t = np.atleast_1d(cls.check_argument(t))
        return _iterate(params, t, kmax)

    @classmethod
    def eval_derivative(cls, params, k, t):
        """d/dt P_k(t) = (k+a+b+1) k / (2(a+1)) * P_{k-1}^{(a+1,b+1)}(t)"""
        k = cls.check_degree(k)
        t = float(cls.check_argument(t))
        if k == 0:
            return 0.0
        factor = (k + params.alpha + params.beta + 1) * k / (2.0 * (params.alpha + 1))
        return factor * float(_last(params.shifted(1, 1), t, k - 1))

    @classmethod
    def derivative_array(cls, params, k, t):
        k = cls.check_degree(k)
        t = np.atleast_1d(cls.check_argument(t))
        if k == 0:
            return np.zeros_like(t)
        factor = (k + params.alpha + params.beta + 1) * k / (2.0 * (params.alpha + 1))
        return factor * _last(params.shifted(1, 1), t, k - 1)

    @classmethod
    def largest_zero(cls, params, k):
        """
        Rightmost zero of P_k in (-1, 1)

        The zero is bracketed by the first sign change on a theta grid walked
        from t = 1 and refined with brentq.
        """
        k = cls.check_degree(k, minimum=1)
        alpha, beta = params.alpha, params.beta
        if k == 1:
            return (beta - alpha) / (alpha + beta + 2)

        theta = np.linspace(0.0, np.pi, 8 * k + 65)
        x = np.cos(theta)
        values = _last(params, x, k)
        hits = np.nonzero(values[1:] <= 0.0)[0]
        if hits.size == 0:
            raise NumericError(
                f"No sign change of P_{k}{params} on the bracketing grid",
                {'degree': k, 'alpha': alpha, 'beta': beta, 'grid': theta.size},
            )
        j = int(hits[0]) + 1
        if values[j] == 0.0:
            return float(x[j])

        try:
            root = brentq(lambda s: _last(params, s, k), x[j], x[j - 1],
                          xtol=ZERO_XTOL, maxiter=200)
        except (RuntimeError, ValueError) as e:
            raise NumericError(
                f"Zero refinement failed for P_{k}{params}: {e}",
                {'degree': k, 'bracket': [float(x[j]), float(x[j - 1])]},
            ) from e
        return float(root)

    @classmethod
    def l_inf(cls, params, t, degree_cap):
        """
        Finite-degree surrogate of l(t) = inf_k P_k(t)

        Returns:
            InfimumResult: min over 0 <= k <= degree_cap with its degree
        """
        degree_cap = cls.check_degree(degree_cap, minimum=1)
        t = float(t)
        if not -1.0 < t < 1.0:
            raise DomainError(f"l_inf needs -1 < t < 1, got {t}")
        values = cls.table(params, degree_cap, [t])[:, 0]
        k = int(np.argmin(values))
        return InfimumResult(value=float(values[k]), attained_degree=k,
                             degree_cap=degree_cap, argument=t)

    @classmethod
    def running_minimum(cls, params, t, kmax):
        """
        Minimum over degrees 0..kmax at every argument

        Returns:
            (values, degrees) arrays of the same length as t
        """
        best = None
        degrees = None
        for k, values in cls.iterate(params, t, kmax):
            if best is None:
                best = values.copy()
                degrees = np.zeros(values.shape, dtype=int)
                continue
            lower = values < best
            best[lower] = values[lower]
            degrees[lower] = k
        return best, degrees

    @classmethod
    def sup_abs_on_interval(cls, params, k, a, b, grid_size=None):
        """
        Estimate max |P_k| over [a, b]

        A uniform grid is refined by bounded scalar maximization between the
        neighbours of the best grid point.

        Args:
            params: JacobiParams
            k: degree
            a, b: interval ends, -1 < a <= b < 1
            grid_size: grid points (default max(1000, 20 k))

        Returns:
            float
        """
        k = cls.check_degree(k)
        if not (-1.0 < a < 1.0 and -1.0 < b < 1.0):
            raise DomainError(f"Interval ends must lie in (-1, 1), got [{a}, {b}]")
        if a > b:
            raise DomainError(f"Empty interval [{a}, {b}]")
        if k == 0:
            return 1.0
        if a == b:
            return abs(cls.eval(params, k, a))

        grid_size = grid_size or max(1000, 20 * k)
        grid = np.linspace(a, b, max(int(grid_size), 2))
        magnitudes = np.abs(_last(params, grid, k))
        i = int(np.argmax(magnitudes))
        best = float(magnitudes[i])

        lo = grid[max(i - 1, 0)]
        hi = grid[min(i + 1, grid.size - 1)]
        result = minimize_scalar(lambda s: -abs(_last(params, s, k)), bounds=(lo, hi),
                                 method='bounded', options={'xatol': REFINE_XATOL})
        if result.success:
            best = max(best, float(-result.fun))
        return best

    @classmethod
    def sup_scan(cls, params, theta_lo, theta_hi, kmax, points_per_period=16):
        """
        Grid sup of |P_k(cos theta)| over [theta_lo, theta_hi] for every k <= kmax

        The grid carries points_per_period points per oscillation of P_kmax.

        Returns:
            (sups, argmax_theta, step) with sups and argmax_theta of length kmax + 1
        """
        kmax = cls.check_degree(kmax, minimum=1)
        if not 0.0 <= theta_lo < theta_hi <= np.pi:
            raise DomainError(f"Invalid angle range [{theta_lo}, {theta_hi}]")
        step = 2.0 * np.pi / (points_per_period * kmax)
        count = int(math.ceil((theta_hi - theta_lo) / step)) + 1
        theta = np.linspace(theta_lo, theta_hi, count)
        x = np.cos(theta)

        sups = np.empty(kmax + 1)
        where = np.empty(kmax + 1)
        for k, values in _iterate(params, x, kmax):
            magnitudes = np.abs(values)
            i = int(np.argmax(magnitudes))
            sups[k] = magnitudes[i]
            where[k] = theta[i]
        logger.debug(f"sup scan {params} on [{theta_lo:.6g}, {theta_hi:.6g}]: "
                     f"{count} points, kmax={kmax}")
        return sups, where, (theta_hi - theta_lo) / max(count - 1, 1)

    @classmethod
    def local_sup(cls, params, degrees, centers, half_width, theta_lo, theta_hi, points=33):
        """
        Dense local sup of |P_k(cos theta)| around one center per degree

        All windows share a single recurrence sweep up to the largest degree.
        """
        degrees = np.asarray(degrees, dtype=int)
        if degrees.size == 0:
            return np.empty(0)
        offsets = np.linspace(-half_width, half_width, points)
        theta = np.clip(np.asarray(centers, dtype=float)[:, None] + offsets[None, :],
                        theta_lo, theta_hi)
        x = np.cos(theta).ravel()

        wanted = {}
        for idx, k in enumerate(degrees):
            wanted.setdefault(int(k), []).append(idx)
        out = np.empty(degrees.size)
        for k, values in _iterate(params, x, int(degrees.max())):
            for idx in wanted.get(k, ()):
                out[idx] = np.max(np.abs(values[idx * points:(idx + 1) * points]))
        return out

    @classmethod
    def polish_sup(cls, params, k, center, half_width, theta_lo, theta_hi):
        """Bounded maximization of |P_k(cos theta)| in one window"""
        lo = max(theta_lo, center - half_width)
        hi = min(theta_hi, center + half_width)
        result = minimize_scalar(lambda s: -abs(_last(params, math.cos(s), k)),
                                 bounds=(lo, hi), method='bounded',
                                 options={'xatol': 1e-13})
        return float(-result.fun)

    @classmethod
    def g_function(cls, params, k, u):
        """
        g(u) = P_k(u)^2 + (1 - u^2) / (k (k + a + b + 1)) * P_k'(u)^2

        Nondecreasing on [0, 1] when a >= 0 and a >= b.
        """
        k = cls.check_degree(k, minimum=1)
        u = np.atleast_1d(cls.check_argument(u))
        p = _last(params, u, k)
        dp = cls.derivative_array(params, k, u)
        return p * p + (1.0 - u * u) / (k * (k + params.alpha + params.beta + 1)) * dp * dp

    @classmethod
    def difference_identity_residual(cls, params, jmax, u):
        """
        max |P_j(u) - P_{j+1}(u) - (2j+a+b+2)/(2(a+1)) (1-u) P_j^{(a+1,b)}(u)| over j < jmax
        """
        jmax = cls.check_degree(jmax, minimum=1)
        u = np.atleast_1d(cls.check_argument(u))
        base = cls.table(params, jmax, u)
        raised = cls.table(params.shifted(1, 0), jmax - 1, u)
        j = np.arange(jmax)[:, None]
        coefficient = (2 * j + params.alpha + params.beta + 2) / (2.0 * (params.alpha + 1))
        residual = base[:-1] - base[1:] - coefficient * (1.0 - u) * raised
        return float(np.max(np.abs(residual)))
