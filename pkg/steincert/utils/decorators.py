"""
Custom Decorators
"""
import sys
import logging
from functools import wraps

import click

from ..errors import DomainError, NumericError, VerificationError, StateError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_VERIFICATION = 4


def exit_codes(f):
    """
    Decorator mapping package errors of a command to the stable exit codes

    DomainError -> 2 (as a click usage error), NumericError and StateError -> 3,
    VerificationError -> 4. A command may return an int exit code itself.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            code = f(*args, **kwargs)
        except DomainError as e:
            raise click.UsageError(str(e))
        except (NumericError, StateError) as e:
            logger.error(f"Numeric failure: {e}")
            diagnostics = getattr(e, 'diagnostics', None)
            click.echo(f"error: {e}", err=True)
            if diagnostics:
                click.echo(f"diagnostics: {diagnostics}", err=True)
            sys.exit(EXIT_NUMERIC)
        except VerificationError as e:
            logger.error(f"Verification failure: {e}")
            click.echo(f"verification failed: {e}", err=True)
            sys.exit(EXIT_VERIFICATION)
        if code:
            sys.exit(code)
        return code
    return decorated_function
