import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def F():
    from twistalg.cocycle import CocycleData
    return CocycleData.standard()


@pytest.fixture(scope="session")
def s7(F):
    from twistalg.spheres import build_sphere
    return build_sphere("S7", F)
