import pytest

from excalg.composition import canonical_octonions, named_algebra


@pytest.fixture(scope="session")
def octonions():
    return canonical_octonions()


@pytest.fixture(scope="session")
def quaternions():
    return named_algebra("h")
