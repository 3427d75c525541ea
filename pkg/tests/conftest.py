import pytest

from numonoid import NumericalMonoid


@pytest.fixture(scope="session")
def cmm():
    return NumericalMonoid(6, 9, 20)


@pytest.fixture(scope="session")
def stamps():
    return NumericalMonoid(4, 7, 10)


@pytest.fixture(scope="session")
def ntt():
    return NumericalMonoid(9, 10, 23)
