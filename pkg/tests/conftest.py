"""Shared fixtures for the pyrsc test suite"""

import os
import sys

import pytest

# Add the parent directory to the path so we can import pyrsc
sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

from pyrsc.cohomology import F2, Field, clear_basis_cache  # noqa: E402
from pyrsc.simplicial import load_bundled  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_basis_cache():
    clear_basis_cache()
    yield
    clear_basis_cache()


@pytest.fixture
def torus():
    return load_bundled("torus")


@pytest.fixture
def rp2():
    return load_bundled("rp2")


@pytest.fixture
def klein_bottle():
    return load_bundled("klein_bottle")


@pytest.fixture
def dunce_hat():
    return load_bundled("dunce_hat")


@pytest.fixture
def cp2():
    return load_bundled("cp2")


@pytest.fixture
def wedge():
    return load_bundled("wedge")


@pytest.fixture
def empty_triangle():
    return load_bundled("empty_triangle")


@pytest.fixture
def qq():
    return Field.rationals()


@pytest.fixture
def f2():
    return F2
