import pytest

from cycindex import named_group, group_closure, perm_from_cycles


@pytest.fixture(scope="session")
def S3():
    return named_group("symmetric", 3)


@pytest.fixture(scope="session")
def S4():
    return named_group("symmetric", 4)


@pytest.fixture(scope="session")
def A3():
    return named_group("alternating", 3)


@pytest.fixture(scope="session")
def A4():
    return named_group("alternating", 4)


@pytest.fixture(scope="session")
def C4():
    return named_group("cyclic", 4)


@pytest.fixture(scope="session")
def V4():
    return group_closure([perm_from_cycles("(1 2)(3 4)", 4),
                          perm_from_cycles("(1 3)(2 4)", 4)])
