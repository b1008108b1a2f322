from functools import lru_cache

import pytest

from garside_kit.families import FamilySpec, structure_for


@lru_cache(maxsize=None)
def mn_structure(n):
    return structure_for(FamilySpec("Mn_R", n))


@pytest.fixture(scope="session")
def m2():
    return mn_structure(2)


@pytest.fixture(scope="session")
def m3():
    return mn_structure(3)


@pytest.fixture(scope="session")
def m4():
    return mn_structure(4)
