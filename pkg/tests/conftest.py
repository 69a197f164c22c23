import os

import pytest
from hypothesis import HealthCheck, settings

from partialhopf import corpus

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def groupoids():
    return corpus.groupoids()


@pytest.fixture(scope="session")
def whas():
    return corpus.weak_hopf_algebras(include_duals=True)


@pytest.fixture(scope="session")
def symmetric_actions():
    return corpus.symmetric_actions()
