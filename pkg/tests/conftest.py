import functools
import time

import pytest
from hypothesis import settings

from posbraid.braid import BraidWord

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CENSUS_BUILD_SECONDS = {}


def word(*syllables, strands=None):
    n = strands if strands is not None else max(g for g, _ in syllables) + 1
    return BraidWord(n, syllables)


@functools.lru_cache(maxsize=None)
def knot_census(max_strands=5, max_crossings=12):
    """Prime knot census with classifications; built once per session."""
    from posbraid.census import enumerate_census
    t0 = time.perf_counter()
    records = tuple(enumerate_census(max_strands, max_crossings, knots=True, prime=True))
    CENSUS_BUILD_SECONDS[(max_strands, max_crossings)] = time.perf_counter() - t0
    return records


@pytest.fixture(scope="session")
def census_5_12():
    return knot_census(5, 12)
