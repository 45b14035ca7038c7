"""Shared fixtures."""

import pytest
from click.testing import CliRunner

from steincert import create_app
from steincert.models import JacobiParams, SpaceKind
from steincert.services import SteinhausService

# Lemma constants are recomputed per space; a smaller cap keeps the suite fast
TEST_DEGREE_CAP = 2000


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def legendre():
    return JacobiParams(0, 0)


@pytest.fixture(scope='session')
def s2():
    return SpaceKind.parse('s2')


@pytest.fixture(scope='session')
def legendre_constants():
    return SteinhausService.find_lemma_constants(JacobiParams(0, 0), degree_cap=TEST_DEGREE_CAP)


@pytest.fixture
def invoke(runner):
    """Run the CLI under the testing configuration"""
    from steincert.cli import cli

    def _invoke(*args):
        return runner.invoke(cli, ['--env', 'testing', *args])
    return _invoke
