"""Shared fixtures: small chains reused across the identity tests.

The chains are session-scoped because monodromy grids are cached per
chain and the heavier tests revisit the same spectral points.
"""

import pytest

from gradedchain.monodromy import ChainSpec
from gradedchain.scalars import Coupling
from gradedchain.varsets import make_varset

C1 = Coupling(1)


@pytest.fixture(scope="session")
def chain1():
    return ChainSpec(1, make_varset([0]), C1)


@pytest.fixture(scope="session")
def chain2():
    return ChainSpec(2, make_varset([0, "1/3"]), C1)


@pytest.fixture(scope="session")
def chain3():
    return ChainSpec(3, make_varset([0, "1/3", "-2/5"]), C1)


@pytest.fixture(scope="session")
def twisted2():
    # diagonal twist separates lambda_2 from lambda_3, so tests notice
    # when a representation scales the wrong argument set by lambda_2
    return ChainSpec(2, make_varset([0, "1/3"]), C1, twist=(1, "2/3", "5/7"))
