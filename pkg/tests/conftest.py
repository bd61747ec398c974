import pytest

from cycdelta.catalog import bundled_desk_catalog


@pytest.fixture(scope="session")
def desk():
    return bundled_desk_catalog()
