import pytest

from src.fock import boson_pair, fermion_pair
from src.modespace import canonical_18


@pytest.fixture
def canonical():
    return canonical_18()


@pytest.fixture
def fermion_pair_state(canonical):
    """f†67 f†69 |0⟩"""
    return fermion_pair(canonical, "v67", "v69")


@pytest.fixture
def boson_pair_state(canonical):
    """b†16² / √2 |0⟩"""
    return boson_pair(canonical, "v16")
