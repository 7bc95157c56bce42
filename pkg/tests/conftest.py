from functools import lru_cache

from hypothesis import HealthCheck, settings

from poissonorder.families import family
from poissonorder.pipeline import AnalysisConfig, analyze

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@lru_cache(maxsize=None)
def _cached(name, items, N):
    return analyze(family=family(name, N=N, **dict(items)), cfg=AnalysisConfig(strict=False))


def analysis_of(name, N, **params):
    """Non-strict analysis of a catalog entry, shared across test modules."""
    return _cached(name, tuple(sorted(params.items())), N)
