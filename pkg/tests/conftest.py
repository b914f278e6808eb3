import pytest

from groupcensus import catalog_tables


@pytest.fixture(scope="session")
def catalog():
    """Every catalog entry with its built table and census report."""
    return catalog_tables()
