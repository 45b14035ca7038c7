"""
Services Package
"""
from .jacobi import JacobiService
from .bessel import BesselService
from .spaces import SpaceCatalog
from .lp import LPService
from .steinhaus import SteinhausService
from .counterexample import CounterexampleService

__all__ = [
    'JacobiService',
    'BesselService',
    'SpaceCatalog',
    'LPService',
    'SteinhausService',
    'CounterexampleService',
]
