import pytest

from trigal import sampler


@pytest.fixture(scope="session")
def table1_rows():
    """The Mathieu cycle-type reproduction, computed once per session (the
    M24 enumeration dominates and is shared by every test that needs it)."""
    return sampler.reproduce_table1()
