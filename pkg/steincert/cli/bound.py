"""
Bound Commands
bound, distances and certificate
"""
import logging
from dataclasses import replace

import click
from flask import current_app
from flask.cli import with_appcontext

from ..services.spaces import SpaceCatalog
from ..services.steinhaus import SteinhausService
from ..utils.decorators import exit_codes, EXIT_OK, EXIT_VERIFICATION
from ..utils.output import emit, render
from .common import (
    build_run,
    common_options,
    parse_distances,
    require_theorem_space,
    spacing_options,
)

logger = logging.getLogger(__name__)


def _constants(run):
    params = SpaceCatalog.params_of(run.space).jacobi
    return SteinhausService.find_lemma_constants(
        params,
        degree_cap=run.degree_cap,
        grid_size=run.grid_size,
        scan_limit=current_app.config['LEMMA_SCAN_LIMIT'],
        floor=current_app.config['LEMMA_FLOOR'],
    )


def _certify(run, plan, constants):
    certificate = SteinhausService.build_certificate(plan, constants, run.k_verify, run.tol)
    decay = SteinhausService.verify_decay_claim(plan, constants, run.degree_cap, run.tol)
    if not decay.ok:
        logger.warning(f"Partial-sum claim fails at j={decay.j}, k={decay.k}: "
                       f"slack {decay.min_slack:.3e}")
    return replace(certificate, decay_claim=decay)


def _certificate_rows(certificate):
    rows = [('index', 'distance', 'z')]
    rows.append((0, '', certificate.z[0]))
    for i, (d, z) in enumerate(zip(certificate.plan.distances, certificate.z[1:]), start=1):
        rows.append((i, d, z))
    return rows


def _plan_rows(plan):
    rows = [('index', 'distance', 'k0', 'u0', 'r', 'extrapolated')]
    for i, d in enumerate(plan.distances, start=1):
        step = plan.r_trace[i - 1] if i <= len(plan.r_trace) else None
        if step is None:
            rows.append((i, d, '', '', '', ''))
        else:
            rows.append((i, d, step.k0, step.u0, step.r, step.extrapolated))
    return rows


@click.command('bound')
@click.option('--space', required=True, help="Space name such as s2, rp3, cp2, hp2 or op2.")
@click.option('--n', 'N', type=int, default=1, show_default=True, help='Number of distances.')
@click.option('--start-fraction', type=float, default=None, help='d_1 as a fraction of d0.')
@click.option('--shrink', type=float, default=None, help='Factor applied to each r(d_i).')
@common_options
@with_appcontext
@exit_codes
def bound(space, N, start_fraction, shrink, **options):
    """Certify m <= 2^-N for N generated distances on a space of dimension >= 2."""
    run = build_run('bound', space=space, N=N, **options)
    require_theorem_space(run.space)
    constants = _constants(run)
    plan = SteinhausService.generate_distances(
        run.space, run.N, constants,
        start_fraction=start_fraction or current_app.config['START_FRACTION'],
        shrink=shrink or current_app.config['SHRINK'],
        degree_cap=run.degree_cap,
        **spacing_options(),
    )
    certificate = _certify(run, plan, constants)
    emit(render(run, certificate.to_dict(), _certificate_rows(certificate)), run.output_path)
    return EXIT_OK if certificate.accepted else EXIT_VERIFICATION


@click.command('distances')
@click.option('--space', required=True, help="Space name such as s2 or cp3.")
@click.option('--n', 'N', type=int, default=1, show_default=True, help='Number of distances.')
@click.option('--start-fraction', type=float, default=None, help='d_1 as a fraction of d0.')
@click.option('--shrink', type=float, default=None, help='Factor applied to each r(d_i).')
@common_options
@with_appcontext
@exit_codes
def distances(space, N, start_fraction, shrink, **options):
    """Emit the distance plan d_1 > ... > d_N with its spacing trace."""
    run = build_run('distances', space=space, N=N, **options)
    require_theorem_space(run.space)
    constants = _constants(run)
    plan = SteinhausService.generate_distances(
        run.space, run.N, constants,
        start_fraction=start_fraction or current_app.config['START_FRACTION'],
        shrink=shrink or current_app.config['SHRINK'],
        degree_cap=run.degree_cap,
        **spacing_options(),
    )
    data = {'constants': constants.to_dict()}
    data.update(plan.to_dict())
    emit(render(run, data, _plan_rows(plan)), run.output_path)
    return EXIT_OK


@click.command('certificate')
@click.option('--space', required=True, help="Space name such as s2 or cp3.")
@click.option('--distances', 'distance_list', required=True,
              help="Comma-separated decreasing distances, e.g. '1.0,1e-3'.")
@common_options
@with_appcontext
@exit_codes
def certificate(space, distance_list, **options):
    """Certificate for user-supplied distances, with a check of their spacing."""
    values = parse_distances(distance_list)
    run = build_run('certificate', space=space, N=max(len(values), 1), **options)
    require_theorem_space(run.space)
    constants = _constants(run)
    plan = SteinhausService.plan_from_distances(run.space, values, constants,
                                                degree_cap=run.degree_cap, **spacing_options())
    result = _certify(run, plan, constants)
    emit(render(run, result.to_dict(), _certificate_rows(result)), run.output_path)
    return EXIT_OK if result.accepted and plan.spacing_ok else EXIT_VERIFICATION
