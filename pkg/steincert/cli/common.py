"""
Shared CLI Options and Parsers
"""
import re
import math

import click
from flask import current_app

from ..errors import DomainError
from ..models.run import RunConfig
from ..services.spaces import SpaceCatalog

_PI_TERM = re.compile(r'^([0-9]*\.?[0-9]*(?:e[+-]?[0-9]+)?)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?$')


def common_options(f):
    """Caps, tolerance, seed and output flags shared by every command"""
    options = [
        click.option('--degree-cap', type=int, default=None, help='Largest degree scanned directly.'),
        click.option('--k-verify', type=int, default=None, help='Degree up to which dual constraints are checked.'),
        click.option('--grid', 'grid_size', type=int, default=None, help='Points of the t grid of the lemma scan.'),
        click.option('--tol', type=float, default=None, help='Constraint tolerance.'),
        click.option('--seed', type=int, default=None, help='Seed of the sampling checks.'),
        click.option('--format', 'format', type=click.Choice(['json', 'csv', 'human']), default=None,
                     help='Output format.'),
        click.option('--out', 'output_path', type=click.Path(dir_okay=False), default=None,
                     help='Output file (stdout when omitted).'),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def parse_distance(text):
    """
    A distance given as a float or as a multiple of pi ('pi/2', '2pi/3', '0.5*pi')
    """
    token = text.strip().lower()
    match = _PI_TERM.match(token)
    if match:
        coefficient = float(match.group(1)) if match.group(1) not in ('', '.') else 1.0
        denominator = float(match.group(2)) if match.group(2) else 1.0
        return coefficient * math.pi / denominator
    try:
        return float(token)
    except ValueError:
        raise DomainError(f"Cannot read distance '{text}'")


def parse_distances(text):
    if text is None or not text.strip():
        return []
    return [parse_distance(part) for part in text.split(',') if part.strip()]


def parse_degrees(text):
    """Comma-separated degrees, with 'a:b' for the inclusive range a..b"""
    degrees = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        try:
            if ':' in part:
                start, stop = part.split(':', 1)
                degrees.extend(range(int(start), int(stop) + 1))
            else:
                degrees.append(int(part))
        except ValueError:
            raise DomainError(f"Invalid degree list '{text}'")
    if not degrees or min(degrees) < 0:
        raise DomainError(f"Invalid degree list '{text}'")
    return degrees


def parse_points(text):
    """Comma-separated arguments of the Jacobi polynomials"""
    try:
        points = [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise DomainError(f"Cannot read points '{text}'")
    if not points:
        raise DomainError("At least one point is required")
    return points


def build_run(command, space=None, **overrides):
    """RunConfig for a command with the space name resolved"""
    if space is not None:
        space = SpaceCatalog.resolve(space)
    return RunConfig.from_app(current_app, command, space=space, **overrides)


def spacing_options():
    """Spacing-function settings taken from the app config"""
    return {
        'points_per_period': current_app.config['POINTS_PER_PERIOD'],
        'safety': current_app.config['DECAY_SAFETY'],
        'extrapolate': current_app.config['DECAY_EXTRAPOLATION'],
    }


def require_theorem_space(space):
    """Refuse dimension-one spaces for the bound pipeline"""
    if not SpaceCatalog.min_alpha_for_theorem(space):
        raise DomainError(
            f"{space.label} has real dimension one, where sets of positive measure can "
            f"avoid every distance of a zero-convergent sequence; see "
            f"`steincert counterexample --space {space.label} --k 3`"
        )
