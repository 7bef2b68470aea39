import pytest

from tracecodes import Field


@pytest.fixture(scope="session")
def f3():
    return Field(3, 1)


@pytest.fixture(scope="session")
def f5():
    return Field(5, 1)


@pytest.fixture(scope="session")
def f9():
    return Field(3, 2)


@pytest.fixture(scope="session")
def f25():
    return Field(5, 2)


@pytest.fixture(scope="session")
def f27():
    return Field(3, 3)


@pytest.fixture(scope="session")
def f81():
    return Field(3, 4)
