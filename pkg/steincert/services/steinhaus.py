"""
Steinhaus Bound Service
Lemma constants, the spacing function r(d), distance plans and the explicit
dual certificate giving m <= 2^-N
"""
import math
import logging

import numpy as np
from scipy.optimize import brentq

from ..errors import DomainError, NumericError
from ..models.lp import Verdict
from ..models.certificate import (
    LemmaConstants,
    SpacingResult,
    DistancePlan,
    DecayReport,
    BoundCertificate,
)
from .bessel import BesselService
from .jacobi import JacobiService
from .lp import LPService
from .spaces import SpaceCatalog

logger = logging.getLogger(__name__)

LEMMA_FLOOR = -0.48
LEMMA_SCAN_LIMIT = 400
DECAY_SAFETY = 1.05
BAND_FACTOR = 1.02
POLISH_WINDOW = 1e-3
U0_BRACKETS = (0.25, 0.5, 1.0, 2.0)


def epsilon_for(lam, N):
    """eps = lambda^(N+1) / ((1 - lambda)(N - 1)) for N >= 2, None for N = 1"""
    if N < 2:
        return None
    return lam ** (N + 1) / ((1.0 - lam) * (N - 1))


def certificate_vector(lam, N):
    """
    Dual vector, normalizer S and bound of the explicit certificate

    Returns:
        (z, S, bound); N = 1 gives z = (1/2, 1), S = None and bound 1/2
    """
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if N == 1:
        return (0.5, 1.0), None, 0.5
    eps = epsilon_for(lam, N)
    S = sum(lam ** i for i in range(N + 1)) + eps * (N - 1)
    z0 = (lam ** N + eps * (N - 1)) / S
    z = (z0,) + tuple(lam ** (i - 1) / S for i in range(1, N + 1))
    bound = lam ** N * (1.0 - lam) + lam ** (N + 1)
    return z, S, bound


def hilb_factor(params, theta):
    """((theta/2)/sin(theta/2))^(alpha+1/2) * cos(theta/2)^(-beta-1/2)"""
    half = np.asarray(theta, dtype=float) / 2.0
    return (half / np.sin(half)) ** (params.alpha + 0.5) * np.cos(half) ** (-params.beta - 0.5)


class SteinhausService:
    """Constructive pipeline from the lemma constants to the certificate"""

    @classmethod
    def check_lemma_hypotheses(cls, params):
        if not (params.alpha >= 0 and params.beta >= -0.5 and params.alpha >= params.beta):
            raise DomainError(
                f"Lemma needs alpha >= 0, beta >= -1/2 and alpha >= beta, got {params}"
            )

    @classmethod
    def find_lemma_constants(cls, params, degree_cap=5000, grid_size=400,
                             scan_limit=LEMMA_SCAN_LIMIT, floor=LEMMA_FLOOR):
        """
        Smallest degree k whose t0 = largest zero of P_{k-1}^{(a+1,b+1)} passes the lemma checks

        A candidate is accepted when t0 > 0, P_k(t0) >= floor, the last
        extremum grows at k, and min over degrees <= degree_cap of P_k(t)
        stays >= -1/2 on a grid of [t0, 1).

        Args:
            params: JacobiParams of a space with real dimension >= 2
            degree_cap: degree cap of the infimum scan
            grid_size: points of the t grid
            scan_limit: largest candidate degree
            floor: acceptance floor for P_k(t0)

        Returns:
            LemmaConstants
        """
        cls.check_lemma_hypotheses(params)
        shifted = params.shifted(1, 1)
        best = None
        next_zero = JacobiService.largest_zero(shifted, 1)

        for k in range(2, scan_limit + 1):
            t0, next_zero = next_zero, JacobiService.largest_zero(shifted, k)
            passed, reason = 0, None
            value = float('nan')
            if t0 <= 0:
                reason = f"t0 = {t0:.6g} is not positive"
            else:
                passed += 1
                value = JacobiService.eval(params, k, t0)
                if value < floor:
                    reason = f"P_k(t0) = {value:.6g} below floor {floor}"
                else:
                    passed += 1
                    following = JacobiService.eval(params, k + 1, next_zero)
                    if not following > value:
                        reason = f"last extremum does not grow ({following:.6g} <= {value:.6g})"
                    else:
                        passed += 1
                        grid = np.linspace(t0, 1.0, grid_size, endpoint=False)
                        mins, degrees = JacobiService.running_minimum(params, grid, degree_cap)
                        i = int(np.argmin(mins))
                        if mins[i] < -0.5:
                            reason = f"l(t) = {mins[i]:.6g} < -1/2 at t = {grid[i]:.6g}"
                        else:
                            constants = LemmaConstants(
                                params=params,
                                t0=float(t0),
                                d0=float(math.acos(t0)),
                                lam=float(-mins[i]),
                                k_star=k,
                                degree_cap=degree_cap,
                                grid_size=grid_size,
                                lam_degree=int(degrees[i]),
                                lam_argument=float(grid[i]),
                            )
                            logger.info(f"Lemma constants for {params}: k*={k}, t0={t0:.12g}, "
                                        f"lambda={constants.lam:.12g}")
                            return constants
            logger.debug(f"Lemma candidate k={k} rejected: {reason}")
            if best is None or passed >= best['passed']:
                best = {'degree': k, 'passed': passed, 'reason': reason, 't0': float(t0),
                        'value': value}

        raise NumericError(
            f"No admissible degree up to {scan_limit} for {params}",
            {'best_candidate': best, 'scan_limit': scan_limit},
        )

    @classmethod
    def _extrapolated_degree(cls, params, d, tau, samples=64):
        """
        Degree beyond which the Hilb approximation c(theta) Omega((k+rho) theta) stays below tau on [d, pi/2]
        """
        thetas = np.linspace(d, np.pi / 2, samples)
        factors = hilb_factor(params, thetas)
        rho = params.rho
        degree = 0
        for theta, factor in zip(thetas, factors):
            x_star = BesselService.omega_decay_point(params.alpha, tau / factor)
            degree = max(degree, int(math.ceil(x_star / theta - rho)))
        return max(degree, 0)

    @classmethod
    def _scan_decay_degree(cls, params, d, tau, degree_cap, points_per_period):
        """Last degree <= degree_cap with sup |P_k(cos theta)| >= tau on [d, pi/2]"""
        lo, hi = d, np.pi / 2
        sups, where, step = JacobiService.sup_scan(params, lo, hi, degree_cap, points_per_period)
        above = np.nonzero(sups >= tau)[0]
        coarse = int(above[-1]) if above.size else 0

        band = np.nonzero(sups[coarse + 1:] >= tau / BAND_FACTOR)[0] + coarse + 1
        if band.size == 0:
            return coarse
        refined = JacobiService.local_sup(params, band, where[band], step, lo, hi)
        for idx in range(band.size - 1, -1, -1):
            k = int(band[idx])
            value = refined[idx]
            if abs(value - tau) <= POLISH_WINDOW * tau:
                value = JacobiService.polish_sup(params, k, where[k], step, lo, hi)
            if value >= tau:
                logger.debug(f"Band refinement moved decay degree {coarse} -> {k}")
                return k
        return coarse

    @classmethod
    def _u0_in_cap(cls, params, k0, tau, eps):
        rho = params.rho
        level = 1.0 - tau

        def excess(theta):
            return JacobiService.eval(params, k0, math.cos(theta)) - level

        upper = None
        for c in U0_BRACKETS:
            if excess(c / (k0 + rho)) < 0:
                upper = c / (k0 + rho)
                break
        if upper is None:
            raise NumericError(f"Cannot bracket P_{k0} = 1 - tau near t = 1",
                               {'degree': k0, 'tau': tau})
        theta = brentq(excess, 0.0, upper, xtol=1e-18, rtol=4 * np.finfo(float).eps)
        u0 = math.cos(theta)

        check = np.linspace(u0, 1.0, 64)
        low = min(float(np.min(values)) for _, values in JacobiService.iterate(params, check, k0))
        if not low > 1.0 - eps:
            raise NumericError(f"P_k dips to {low:.12g} <= 1 - eps on [u0, 1]",
                               {'degree': k0, 'u0': u0, 'eps': eps})
        return theta

    @classmethod
    def r_of_d(cls, params, d, eps, degree_cap, points_per_period=16,
               safety=DECAY_SAFETY, extrapolate=True):
        """
        Spacing function r(d)

        k0 is the last degree whose sup of |P_k| over [0, cos d] reaches
        tau = eps / safety; u0 solves P_{k0}(u0) = 1 - tau so that P_k > 1 - eps
        on [u0, 1] for k <= k0. When decay is not established inside the cap
        the Bessel envelope fixes k0 and u0 instead.

        Args:
            params: JacobiParams
            d: distance in (0, pi/2)
            eps: threshold in (0, 1)
            degree_cap: largest degree scanned directly

        Returns:
            SpacingResult with r = arccos(u0)

        Raises:
            NumericError: cap exhausted without extrapolation, or r not in (0, d)
        """
        if not 0.0 < eps < 1.0:
            raise DomainError(f"eps must lie in (0, 1), got {eps}")
        if not 0.0 < d < np.pi / 2:
            raise DomainError(f"d must lie in (0, pi/2), got {d}")
        degree_cap = JacobiService.check_degree(degree_cap, minimum=1)
        tau = eps / safety

        k_ext = cls._extrapolated_degree(params, d, tau)
        extrapolated = False
        if k_ext <= degree_cap:
            k0 = cls._scan_decay_degree(params, d, tau, degree_cap, points_per_period)
            if k0 >= degree_cap - degree_cap // 10:
                if not extrapolate:
                    raise NumericError(
                        f"Decay below {tau:.3g} not reached within degree cap {degree_cap}",
                        {'offending_degree': k0, 'degree_cap': degree_cap, 'd': d},
                    )
                extrapolated = k_ext > k0
                k0 = max(k0, k_ext)
        elif extrapolate:
            k0 = k_ext
            extrapolated = True
        else:
            raise NumericError(
                f"Decay below {tau:.3g} needs degree about {k_ext}, beyond cap {degree_cap}",
                {'offending_degree': k_ext, 'degree_cap': degree_cap, 'd': d},
            )

        if k0 == 0:
            raise NumericError("No degree reaches the decay threshold", {'d': d, 'eps': eps})

        if extrapolated:
            x_tau = BesselService.omega_inverse(params.alpha, 1.0 - tau)
            r = x_tau / (k0 + params.rho)
        else:
            r = cls._u0_in_cap(params, k0, tau, eps)

        u0 = math.cos(r)
        if not 0.0 < r < d:
            raise NumericError(f"r = {r!r} is not inside (0, d = {d!r})",
                               {'d': d, 'k0': k0, 'r': r})
        if u0 == 1.0:
            raise NumericError(f"r = {r:.3g} is below double precision resolution near 1",
                               {'d': d, 'k0': k0, 'r': r})

        result = SpacingResult(d=float(d), eps=float(eps), r=float(r), k0=int(k0),
                               u0=float(u0), extrapolated=extrapolated, degree_cap=degree_cap)
        logger.info(f"r({d:.6g}) = {r:.6g} with k0={k0}"
                    f"{' (extrapolated)' if extrapolated else ''}")
        return result

    @classmethod
    def _check_space(cls, space, constants):
        if not SpaceCatalog.min_alpha_for_theorem(space):
            raise DomainError(
                f"{space.label} has real dimension one; use the counterexample construction"
            )
        if SpaceCatalog.params_of(space).jacobi != constants.params:
            raise DomainError(f"Constants computed for {constants.params}, not for {space.label}")

    @classmethod
    def generate_distances(cls, space, N, constants, start_fraction=0.9, shrink=1.0,
                           degree_cap=None, **spacing_options):
        """
        Distance plan d_1 = start_fraction * d0, d_{i+1} = shrink * r(d_i)

        Returns:
            DistancePlan
        """
        cls._check_space(space, constants)
        if N < 1:
            raise DomainError(f"N must be positive, got {N}")
        if not 0.0 < start_fraction < 1.0:
            raise DomainError(f"start_fraction must lie in (0, 1), got {start_fraction}")
        if not 0.0 < shrink <= 1.0:
            raise DomainError(f"shrink must lie in (0, 1], got {shrink}")
        degree_cap = degree_cap or constants.degree_cap

        eps = epsilon_for(constants.lam, N)
        distances = [start_fraction * constants.d0]
        trace = []
        for _ in range(N - 1):
            step = cls.r_of_d(constants.params, distances[-1], eps, degree_cap, **spacing_options)
            trace.append(step)
            distances.append(shrink * step.r)

        plan = DistancePlan(space=space, N=N, distances=tuple(distances), epsilon=eps,
                            r_trace=tuple(trace), start_fraction=start_fraction, shrink=shrink)
        logger.info(f"Distance plan on {space.label}, N={N}: "
                    f"{', '.join(f'{d:.6g}' for d in distances)}")
        return plan

    @classmethod
    def plan_from_distances(cls, space, distances, constants, degree_cap=None, **spacing_options):
        """
        Plan for user-supplied distances, recording whether d_{i+1} <= r(d_i) holds
        """
        cls._check_space(space, constants)
        distances = LPService.validate_distances(distances)
        if not distances:
            raise DomainError("At least one distance is required")
        if distances[0] >= constants.d0:
            raise DomainError(f"d_1 = {distances[0]!r} is not below d0 = {constants.d0!r}")
        N = len(distances)
        eps = epsilon_for(constants.lam, N)
        degree_cap = degree_cap or constants.degree_cap

        trace = []
        ok = True
        for d, following in zip(distances, distances[1:]):
            step = cls.r_of_d(constants.params, d, eps, degree_cap, **spacing_options)
            trace.append(step)
            if following > step.r:
                ok = False
                logger.warning(f"Spacing violated: d={following:.6g} exceeds r({d:.6g}) = {step.r:.6g}")
        return DistancePlan(space=space, N=N, distances=distances, epsilon=eps,
                            r_trace=tuple(trace), spacing_ok=ok)

    @classmethod
    def build_certificate(cls, plan, constants, k_verify=10000, tol=1e-9):
        """
        Explicit dual certificate of the plan with its numeric feasibility report

        Returns:
            BoundCertificate
        """
        z, S, bound = certificate_vector(constants.lam, plan.N)
        lp = LPService.build_truncation(constants.params, plan.distances, max(plan.N, 1))
        feasibility = LPService.verify_dual(lp, z, k_verify, tol)
        certificate = BoundCertificate(
            plan=plan,
            constants=constants,
            z=tuple(float(v) for v in z),
            S=S,
            bound=float(bound),
            feasibility=feasibility,
            caps={
                'degree_cap': constants.degree_cap,
                'grid_size': constants.grid_size,
                'k_verify': k_verify,
                'extrapolated_steps': sum(1 for step in plan.r_trace if step.extrapolated),
            },
        )
        if feasibility.verdict is Verdict.VIOLATED:
            logger.error(f"Certificate for {plan.space.label}, N={plan.N} fails the dual check: "
                         f"min slack {feasibility.min_slack:.3e} at k={feasibility.argmin_degree}")
        else:
            logger.info(f"Certificate for {plan.space.label}, N={plan.N}: bound {bound:.6g} "
                        f"<= {2.0 ** -plan.N:.6g}")
        return certificate

    @classmethod
    def verify_decay_claim(cls, plan, constants, k_max, tol=1e-9):
        """
        Check sum_{i<=j} lambda^(i-1) P_k(cos d_i) >= -lambda^j - eps (j - 1)

        Returns:
            DecayReport with the minimum slack and its (j, k)
        """
        k_max = JacobiService.check_degree(k_max)
        lam = constants.lam
        eps = plan.epsilon or 0.0
        values = JacobiService.table(constants.params, k_max, np.cos(np.asarray(plan.distances)))
        weights = lam ** np.arange(plan.N)
        partial = np.cumsum(values * weights, axis=1)
        j = np.arange(1, plan.N + 1)
        slack = partial + lam ** j + eps * (j - 1)
        k, col = np.unravel_index(int(np.argmin(slack)), slack.shape)
        report = DecayReport(min_slack=float(slack[k, col]), j=int(col) + 1, k=int(k),
                             k_max=k_max, tolerance=tol)
        logger.info(f"Partial-sum claim up to k={k_max}: min slack {report.min_slack:.3e} "
                    f"at j={report.j}, k={report.k}")
        return report

    @classmethod
    def last_extremum_values(cls, params, k_start, count):
        """P_k at the largest zero of P_{k-1}^{(a+1,b+1)} for k_start <= k <= k_start + count"""
        shifted = params.shifted(1, 1)
        out = []
        for k in range(k_start, k_start + count + 1):
            t = JacobiService.largest_zero(shifted, k - 1) if k > 1 else -1.0
            out.append(JacobiService.eval(params, k, t))
        return np.asarray(out)

    @classmethod
    def check_last_extremum_growth(cls, params, k_start, count=50):
        """The last extremum value P_k(t0(k)) increases over count consecutive degrees"""
        k_start = JacobiService.check_degree(k_start, minimum=2)
        values = cls.last_extremum_values(params, k_start, count)
        increments = np.diff(values)
        i = int(np.argmin(increments))
        return {
            'k_start': k_start,
            'count': count,
            'min_increment': float(increments[i]),
            'worst_degree': k_start + i,
            'ok': bool(np.all(increments > 0)),
        }

    @classmethod
    def limit_gap(cls, params, k=2000):
        """Distance of P_k(t0(k)) from the Omega limit at j_{alpha+1}"""
        value = float(cls.last_extremum_values(params, k, 0)[0])
        j = BesselService.first_positive_zero(params.alpha + 1).value
        limit = BesselService.omega(params.alpha, j)
        return {'k': k, 'value': value, 'limit': limit, 'gap': value - limit}

    @classmethod
    def check_claim_a(cls, params, degrees, grid_size=2001, tol=1e-8):
        """
        g nondecreasing on [0, 1] and min of P_k over [0, 1] attained at t0(k)

        Returns:
            dict with per-degree rows and an overall ok flag
        """
        cls.check_lemma_hypotheses(params)
        shifted = params.shifted(1, 1)
        u = np.linspace(0.0, 1.0, grid_size)
        spacing = u[1] - u[0]
        rows = []
        for k in degrees:
            g = JacobiService.g_function(params, k, u)
            worst_step = float(np.min(np.diff(g)))
            t0 = JacobiService.largest_zero(shifted, k - 1) if k > 1 else -1.0
            values = JacobiService.eval_array(params, k, u)
            i = int(np.argmin(values))
            at_t0 = JacobiService.eval(params, k, min(max(t0, 0.0), 1.0))
            minimum_ok = t0 >= 0 and abs(u[i] - t0) <= spacing and at_t0 <= values[i] + 1e-12
            rows.append({
                'k': int(k),
                'g_min_step': worst_step,
                't0': float(t0),
                'grid_argmin': float(u[i]),
                'monotone': worst_step >= -tol,
                'minimum_at_t0': bool(minimum_ok),
            })
        return {
            'rows': rows,
            'ok': all(row['monotone'] and row['minimum_at_t0'] for row in rows),
        }

    @classmethod
    def check_initial_segment(cls, constants, grid_size=200):
        """P_0(t) > P_1(t) > ... > P_{k*}(t) on a grid of (t0, 1)"""
        t = np.linspace(constants.t0, 1.0, grid_size + 2)[1:-1]
        values = JacobiService.table(constants.params, constants.k_star, t)
        steps = np.diff(values, axis=0)
        k, i = np.unravel_index(int(np.argmax(steps)), steps.shape)
        return {
            'k_star': constants.k_star,
            'max_step': float(steps[k, i]),
            'at_degree': int(k),
            'at_t': float(t[i]),
            'ok': bool(np.all(steps < 0)),
        }
