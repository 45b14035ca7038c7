"""
Verify Command
Numeric corroboration of the facts the bound pipeline relies on
"""
import logging

import click
from flask import current_app
from flask.cli import with_appcontext
import numpy as np

from ..services.bessel import BesselService
from ..services.jacobi import JacobiService
from ..services.spaces import SpaceCatalog
from ..services.steinhaus import SteinhausService
from ..utils.decorators import exit_codes, EXIT_OK, EXIT_VERIFICATION
from ..utils.output import emit, render
from .common import build_run, common_options, require_theorem_space

logger = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-9
LIMIT_TOLERANCE = 0.02


@click.command('verify')
@click.option('--space', default='s2', show_default=True, help='Space whose parameters are checked.')
@click.option('--limit-degree', type=int, default=2000, show_default=True,
              help='Degree of the last-extremum limit check.')
@common_options
@with_appcontext
@exit_codes
def verify(space, limit_degree, **options):
    """Run the Claim B, Landau, identity, last-extremum and Claim A checks."""
    run = build_run('verify', space=space, **options)
    require_theorem_space(run.space)
    params = SpaceCatalog.params_of(run.space).jacobi

    claim_b = BesselService.claim_b_sweep(strict=False)
    constants = SteinhausService.find_lemma_constants(
        params, degree_cap=run.degree_cap, grid_size=run.grid_size,
        scan_limit=current_app.config['LEMMA_SCAN_LIMIT'], floor=current_app.config['LEMMA_FLOOR'])

    identity = JacobiService.difference_identity_residual(params, 100, np.linspace(-0.99, 0.99, 199))
    growth = SteinhausService.check_last_extremum_growth(params, constants.k_star, 50)
    limit = SteinhausService.limit_gap(params, limit_degree)
    claim_a = SteinhausService.check_claim_a(params, range(constants.k_star, constants.k_star + 11))
    segment = SteinhausService.check_initial_segment(constants)

    checks = {
        'claim_b': claim_b['claim_b_ok'],
        'zeros_increasing': claim_b['zeros_increasing'],
        'landau_monotone': claim_b['landau_monotone'],
        'difference_identity': identity <= IDENTITY_TOLERANCE,
        'last_extremum_growth': growth['ok'],
        'last_extremum_limit': abs(limit['gap']) <= LIMIT_TOLERANCE,
        'claim_a': claim_a['ok'],
        'initial_segment': segment['ok'],
    }
    data = {
        'space': run.space.label,
        'alpha': params.alpha,
        'beta': params.beta,
        'checks': checks,
        'constants': constants.to_dict(),
        'difference_identity_residual': identity,
        'last_extremum_growth': growth,
        'last_extremum_limit': limit,
        'claim_a': claim_a['rows'],
        'initial_segment': segment,
        'claim_b': claim_b['rows'],
        'ok': all(checks.values()),
    }
    for name, passed in checks.items():
        if not passed:
            logger.error(f"Check '{name}' failed for {run.space.label}")

    rows = [('check', 'passed')] + [(name, passed) for name, passed in checks.items()]
    emit(render(run, data, rows), run.output_path)
    return EXIT_OK if data['ok'] else EXIT_VERIFICATION
