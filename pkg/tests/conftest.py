import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def isolated_cache(tmp_path_factory):
    """Keep the Sp(6, 2) cache out of the user's home during tests."""
    path = tmp_path_factory.mktemp("torelli-cache")
    old = os.environ.get("TORELLI_CACHE_DIR")
    os.environ["TORELLI_CACHE_DIR"] = str(path)
    yield path
    if old is None:
        os.environ.pop("TORELLI_CACHE_DIR", None)
    else:
        os.environ["TORELLI_CACHE_DIR"] = old


@pytest.fixture(scope="session")
def sp6(isolated_cache):
    from torelli import mod2
    return mod2.enumerate_sp_mod2(3)
