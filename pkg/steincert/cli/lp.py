"""
LP Command
"""
import click
from flask.cli import with_appcontext

from ..models.lp import LPStatus
from ..services.lp import LPService
from ..services.spaces import SpaceCatalog
from ..utils.decorators import exit_codes, EXIT_OK, EXIT_NUMERIC
from ..utils.output import emit, render
from .common import build_run, common_options, parse_distances


@click.command('lp-solve')
@click.option('--space', default='s2', show_default=True, help='Space providing (alpha, beta).')
@click.option('--distances', 'distance_list', default='',
              help="Comma-separated distances in (0, pi), e.g. 'pi/2,0.3'.")
@click.option('--K', 'K', type=int, default=50, show_default=True, help='Truncation degree.')
@common_options
@with_appcontext
@exit_codes
def lp_solve(space, distance_list, K, **options):
    """Solve the degree-K truncated LP and report the duality gap."""
    run = build_run('lp-solve', space=space, **options)
    params = SpaceCatalog.params_of(run.space).jacobi
    values = sorted(parse_distances(distance_list), reverse=True)

    lp = LPService.build_truncation(params, values, K)
    solution = LPService.solve_primal(lp)
    data = solution.to_dict()
    data['space'] = run.space.label
    code = EXIT_OK
    if solution.status is LPStatus.OPTIMAL:
        data['gap'] = LPService.weak_duality_gap(solution)
    elif solution.status is not LPStatus.INFEASIBLE:
        code = EXIT_NUMERIC

    rows = [('k', 'f_k')] + [(k, w) for k, w in sorted(solution.primal_f.items())]
    emit(render(run, data, rows), run.output_path)
    return code
