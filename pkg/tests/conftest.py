from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from weakhopf.exactlin import QQ
from weakhopf.generators import fixture

settings.register_profile("ci", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

SMALL = ["C2", "S3", "discrete-3", "pair-2"]
ALL = SMALL + ["chein-S3"]


@lru_cache(maxsize=None)
def cached(name, field=QQ):
    return fixture(name, field)


@pytest.fixture(params=SMALL)
def small(request):
    return cached(request.param)


@pytest.fixture(params=ALL)
def any_fixture(request):
    return cached(request.param)
