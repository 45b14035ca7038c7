"""
Jacobi Evaluation Command
Values, derivatives and largest zeros as tables for plotting scripts
"""
import click
from flask.cli import with_appcontext
import numpy as np

from ..errors import DomainError
from ..models.jacobi import JacobiParams
from ..services.jacobi import JacobiService
from ..services.spaces import SpaceCatalog
from ..utils.decorators import exit_codes, EXIT_OK
from ..utils.output import emit, render
from .common import build_run, common_options, parse_degrees, parse_points


def _params(space, alpha, beta):
    if alpha is not None or beta is not None:
        if alpha is None or beta is None:
            raise DomainError("--alpha and --beta must be given together")
        return JacobiParams(alpha, beta)
    return SpaceCatalog.params_of(SpaceCatalog.resolve(space or 's2')).jacobi


@click.command('jacobi-eval')
@click.option('--space', default=None, help='Space providing (alpha, beta); default s2.')
@click.option('--alpha', type=float, default=None, help='Explicit alpha (with --beta).')
@click.option('--beta', type=float, default=None, help='Explicit beta (with --alpha).')
@click.option('--degrees', required=True, help="Degrees, e.g. '0,3,7' or '0:20'.")
@click.option('--points', default=None, help="Comma-separated arguments in [-1, 1].")
@click.option('--samples', type=int, default=201, show_default=True,
              help='Uniform points on [-1, 1] when --points is omitted.')
@click.option('--derivative', is_flag=True, help='Include dP_k/dt.')
@common_options
@with_appcontext
@exit_codes
def jacobi_eval(space, alpha, beta, degrees, points, samples, derivative, **options):
    """Tabulate normalized Jacobi polynomials P_k(t) with P_k(1) = 1."""
    run = build_run('jacobi-eval', **options)
    params = _params(space, alpha, beta)
    ks = parse_degrees(degrees)
    if points:
        t = np.array(parse_points(points))
    else:
        t = np.linspace(-1.0, 1.0, max(samples, 2))
    JacobiService.check_argument(t)

    values = JacobiService.table(params, max(ks), t)
    header = ['t'] + [f"P_{k}" for k in ks]
    derivatives = {}
    if derivative:
        derivatives = {k: JacobiService.derivative_array(params, k, t) for k in ks}
        header += [f"dP_{k}" for k in ks]

    rows = [tuple(header)]
    for i, x in enumerate(t):
        row = [float(x)] + [float(values[k, i]) for k in ks]
        row += [float(derivatives[k][i]) for k in ks] if derivative else []
        rows.append(tuple(row))

    data = {
        'alpha': params.alpha,
        'beta': params.beta,
        'degrees': ks,
        'largest_zeros': {str(k): JacobiService.largest_zero(params, k) for k in ks if k >= 1},
        'values': [dict(zip(header, row)) for row in rows[1:]],
    }
    emit(render(run, data, rows), run.output_path)
    return EXIT_OK
