import pathlib

import pytest

from heffter import read_grid

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def h17_12():
    """Globally simple integer H(17;12)."""
    return read_grid(DATA / "h17_12.txt")


@pytest.fixture(scope="session")
def h17_16():
    return read_grid(DATA / "h17_16.txt")


@pytest.fixture(scope="session")
def h17_12_3():
    """Support shifted H(17;12,3) with alpha=6."""
    return read_grid(DATA / "h17_12_3.txt")


@pytest.fixture(scope="session")
def h17_15():
    """Merged globally simple H(17;15), alpha=8."""
    return read_grid(DATA / "h17_15.txt")


@pytest.fixture(scope="session")
def h6_12_8_4():
    """Rectangular H(6,12;8,4)."""
    return read_grid(DATA / "h6_12_8_4.txt")


@pytest.fixture(scope="session")
def h9_3_base():
    """H(9;3) on diagonals D_0, D_1, D_8."""
    return read_grid(DATA / "h9_3_base.txt")


@pytest.fixture(scope="session")
def h9_3_beta1():
    """The same H(9;3) relocated with beta=1, eps=2."""
    return read_grid(DATA / "h9_3_beta1.txt")
