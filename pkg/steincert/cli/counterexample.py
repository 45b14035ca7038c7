"""
Counterexample Command
"""
import click
from flask import current_app
from flask.cli import with_appcontext

from ..services.counterexample import CounterexampleService
from ..utils.decorators import exit_codes, EXIT_OK, EXIT_VERIFICATION
from ..utils.output import emit, render
from .common import build_run, common_options


@click.command('counterexample')
@click.option('--space', required=True, help='s1 or rp1.')
@click.option('--k', 'level', type=int, required=True, help='Level of the construction (1..12).')
@click.option('--samples', type=int, default=None, help='Random point pairs of the sampled check.')
@common_options
@with_appcontext
@exit_codes
def counterexample(space, level, samples, **options):
    """Arc family avoiding d_k, 3 d_k, ..., 3^k d_k on the circle or projective line."""
    run = build_run('counterexample', space=space, **options)
    family = CounterexampleService.build(run.space, level)
    avoidance = CounterexampleService.check_avoidance(
        family, samples or current_app.config['SAMPLES'], run.seed)
    measure = CounterexampleService.measure(family)
    data = CounterexampleService.summary(family, avoidance, measure)

    emit(render(run, data, CounterexampleService.to_csv_rows(family)), run.output_path)
    ok = avoidance.analytic_ok and avoidance.min_gap > 0 and measure.total >= measure.lower_bound
    return EXIT_OK if ok else EXIT_VERIFICATION
