import pytest

from treejac.fixtures import chain2_genus12, chain2_mixed, chain2_unit, star4, star4_prime


@pytest.fixture
def fixa():
    """Two unit components joined at one node."""
    return chain2_unit()


@pytest.fixture
def fixb():
    """Two components with h = (1, 2)."""
    return chain2_mixed()


@pytest.fixture
def fixc():
    """Star with hub C3; h = (1, 1, 2, 2)."""
    return star4()


@pytest.fixture
def fixd():
    """Chain with genera (1, 2); g(X) = 3."""
    return chain2_genus12()


@pytest.fixture
def fixe():
    """Star shape with prime total polarization 7."""
    return star4_prime()
