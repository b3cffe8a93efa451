"""Helpers for testing."""

import os

import pytest

from polyteach.arrangement import Arrangement

DIR_PATH = os.path.dirname(__file__)
FILES_DIR = os.path.join(DIR_PATH, 'files')


@pytest.fixture()
def filepath():
    """Returns full file path for test files."""

    def make_filepath(filename):
        return os.path.join(FILES_DIR, filename)

    return make_filepath


@pytest.fixture()
def load_file(filepath):
    """Opens filename with encoding and return its contents."""

    def make_load_file(filename, encoding='utf-8'):
        with open(filepath(filename), encoding=encoding) as f:
            return f.read()

    return make_load_file


@pytest.fixture()
def triangle():
    """Lines x=0, y=0 and x+y=1."""
    return Arrangement([((1, 0), 0), ((0, 1), 0), ((1, 1), 1)])


@pytest.fixture()
def parallel():
    """Lines x=0, x=1 and x=2."""
    return Arrangement([((1, 0), 0), ((1, 0), 1), ((1, 0), 2)])


@pytest.fixture()
def concurrent():
    """Lines x=0, y=0 and x+y=0 through the origin."""
    return Arrangement([((1, 0), 0), ((0, 1), 0), ((1, 1), 0)])
