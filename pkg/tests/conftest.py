import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from voazhu.instances import fock, heisenberg_voa, verma, virasoro_voa


@pytest.fixture(scope="session")
def heis():
    return heisenberg_voa()


@pytest.fixture(scope="session")
def vir_half():
    return virasoro_voa("1/2")


@pytest.fixture(scope="session")
def fock_one(heis):
    return fock(1)


@pytest.fixture(scope="session")
def fock_half(heis):
    return fock("1/2")


@pytest.fixture(scope="session")
def verma_ising(vir_half):
    return verma("1/2", "1/16")
