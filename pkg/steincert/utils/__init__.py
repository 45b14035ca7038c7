"""
Utilities Package
"""
from .decorators import exit_codes, EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFICATION
from .output import atomic_write, emit, render

__all__ = [
    'exit_codes',
    'EXIT_OK', 'EXIT_USAGE', 'EXIT_NUMERIC', 'EXIT_VERIFICATION',
    'atomic_write', 'emit', 'render',
]
