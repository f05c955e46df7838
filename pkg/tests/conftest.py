from pathlib import Path

import pytest

from cyclicgraph.semigroup import ReesSpec, cyclic_group, monogenic, rees_matrix

DATA = Path(__file__).resolve().parent.parent / "data"


def a(i):
    """Element id of a^i in a monogenic table."""
    return i - 1


@pytest.fixture
def m56():
    return monogenic(5, 6)


@pytest.fixture
def rees5_spec():
    return ReesSpec(cyclic_group(1), 2, 2, [[0, None], [None, 0]])


@pytest.fixture
def rees5(rees5_spec):
    return rees_matrix(rees5_spec)


@pytest.fixture
def data_dir():
    return DATA
