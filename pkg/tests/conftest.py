import pytest

from klein336.group import get_group
from klein336.report import run_verify


@pytest.fixture(scope="session")
def group():
    return get_group()


@pytest.fixture(scope="session")
def verify_outcomes(group):
    return run_verify(group, seed=0)
