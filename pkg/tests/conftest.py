"""Shared fixtures and helpers for the test suite.

Oracle conventions used throughout the tests:

  [TRIVIAL]  values asserted directly (definitions, tiny hand computations)
  [DERIVED]  values computed by an independent oracle (sympy, brute force,
             plug-in evaluation) and frozen into the test
  [PUBLISHED] closed-form values from the published tables the package
             reproduces
"""

import pytest

from axia.catalog import DIHEDRAL_TYPES, dihedral
from axia.m4 import build_m4a, build_m4b
from axia.scalars import Polynomial, RationalFunction, rat


def rf(num_coeffs, den_coeffs=("1",)):
    """RationalFunction from ascending coefficient strings."""
    return RationalFunction(Polynomial([rat(c) for c in num_coeffs]),
                            Polynomial([rat(c) for c in den_coeffs]))


def poly(*coeffs):
    """Polynomial from ascending coefficient strings/ints."""
    return Polynomial([rat(c) for c in coeffs])


@pytest.fixture(scope="session")
def m4a():
    return build_m4a()


@pytest.fixture(scope="session")
def m4b():
    return build_m4b()


@pytest.fixture(scope="session")
def catalog():
    return {name: dihedral(name) for name in DIHEDRAL_TYPES}
