"""
Command Line Interface
"""
import click

from .. import create_app


@click.group()
@click.option('--env', envvar='STEINCERT_ENV', default='development', show_default=True,
              type=click.Choice(['development', 'production', 'testing', 'default']),
              help='Configuration to load.')
@click.pass_context
def cli(ctx, env):
    """SteinCert: certificates for m <= 2^-N on rank-one symmetric spaces."""
    app = create_app(env)
    ctx.with_resource(app.app_context())


def register_commands(group):
    """Attach every command module to the group"""
    from .bound import bound, distances, certificate
    from .lp import lp_solve
    from .counterexample import counterexample
    from .jacobi import jacobi_eval
    from .verify import verify

    for command in (bound, distances, certificate, lp_solve, counterexample, jacobi_eval, verify):
        group.add_command(command)


register_commands(cli)

__all__ = ['cli', 'register_commands']
