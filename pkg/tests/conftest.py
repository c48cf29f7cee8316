import pytest
from hypothesis import HealthCheck, settings

from latframe.corpus import standard_corpus

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()
